#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symrees/form_matrix.hpp"
#include "symrees/ideal.hpp"

namespace symrees {

/// Presentation k[x, y] / P of the Rees algebra R[It] of an equigenerated
/// ideal, y_i mapping to f_i t.
struct ReesPresentation {
  RingPtr source;   // k[x]
  RingPtr ambient;  // k[x, y], blocks {x}, {y}
  RingPtr target;   // k[y]
  std::vector<Polynomial> forms;
  int degree = 0;
  /// Minimal generators, ascending by (x-degree, y-degree).
  Ideal ideal;
  std::vector<std::pair<int, int>> bidegrees;
};

/// Eliminates t from (y_i - t f_i). The generators of I are used as given
/// and must be nonzero forms of one degree.
ReesPresentation rees_ideal(const Ideal& I);

/// P ∩ k[y] in the target ring, minimalized.
Ideal implicit_ideal(const ReesPresentation& P);

/// Weak Jacobian dual: one row per generator of bidegree (1, e), one column
/// per x variable, entries in k[y]; row r satisfies sum_i x_i psi(r, i) = g_r.
struct JacobianDual {
  FormMatrix psi;
  std::vector<Polynomial> relations;
};

JacobianDual jacobian_dual(const ReesPresentation& P);

/// F stands for F t^weight.
struct WeightedForm {
  Polynomial form;
  int weight = 1;
};

/// Kernel of k[x, y, z] -> R[t], y_i -> f_i t, z_j -> F_j t^{w_j}. The ring is
/// graded by x: 1, y: d, z_j: deg F_j, which makes the kernel homogeneous.
struct SubalgebraPresentation {
  RingPtr ring;
  Ideal ideal;
  std::size_t nx = 0, ny = 0, nz = 0;
};

SubalgebraPresentation subalgebra_presentation(const Ideal& I, const std::vector<WeightedForm>& extra);

/// The graded ring k[x, y, z] used by subalgebra_presentation.
RingPtr presentation_ring(const Ideal& I, const std::vector<WeightedForm>& extra);

/// Names for the image and extra variables that avoid the source names.
std::vector<std::string> image_names(const PolyRing& source, std::size_t count);
std::vector<std::string> extra_names(const PolyRing& source, std::size_t count);

}  // namespace symrees
