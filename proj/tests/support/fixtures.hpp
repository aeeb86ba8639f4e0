#pragma once

#include <string>
#include <vector>

#include "symrees/form_matrix.hpp"
#include "symrees/ideal.hpp"
#include "symrees/rees.hpp"

namespace fixture {

using symrees::FormMatrix;
using symrees::Ideal;
using symrees::Polynomial;
using symrees::RingPtr;

// k[x0..x{n-1}] over the rationals.
RingPtr ring(std::size_t n);
Polynomial poly(const std::string& text, const RingPtr& R);
Ideal ideal(const RingPtr& R, std::initializer_list<const char*> gens);
FormMatrix matrix(const RingPtr& R, std::initializer_list<std::initializer_list<const char*>> rows);

Ideal standard_quadratic();
Ideal p4_monomial();
Ideal sub_hankel();
FormMatrix noether_matrix();
Ideal noether();
FormMatrix noname_matrix();
Ideal noname();
// (x0 q, x1 q, f) with x2-monoids q = x0 x2 + x1^2, f = x1^2 x2 + x0^3.
Ideal de_jonquieres_cubic();

struct PolarQuartic {
  RingPtr R;
  Ideal I;  // partials of c q
  Polynomial c, q;
  Polynomial element;  // x1^2 + x2^2 + x0 x3
  Ideal a;             // (element, x1 x2 x3)
  std::vector<symrees::WeightedForm> extras;
};
PolarQuartic polar_quartic();

FormMatrix alberich_syzygies();
Ideal alberich();

}  // namespace fixture
