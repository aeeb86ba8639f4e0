#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symrees/field.hpp"
#include "symrees/order.hpp"

namespace symrees {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// A contiguous run of variables used for elimination and bigrading.
struct VariableBlock {
  std::size_t first = 0;
  std::size_t size = 0;
  friend bool operator==(const VariableBlock&, const VariableBlock&) = default;
};

/// Graded polynomial ring k[v_0, ..., v_{n-1}] over a coefficient field.
///
/// Variables carry positive integer weights (all 1 for a standard graded
/// ring) and are partitioned into ordered contiguous blocks. The default
/// monomial order is weighted grevlex.
class PolyRing {
 public:
  PolyRing(std::vector<std::string> names, CoefficientField field,
           std::vector<std::size_t> block_sizes = {}, std::vector<int> weights = {});

  static RingPtr make(std::vector<std::string> names, CoefficientField field = CoefficientField::rationals(),
                      std::vector<std::size_t> block_sizes = {}, std::vector<int> weights = {});

  /// Names `prefix` + i for i in [first, first + count).
  static std::vector<std::string> indexed_names(std::string_view prefix, std::size_t count,
                                                std::size_t first = 0);

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const CoefficientField& field() const { return field_; }
  const std::vector<VariableBlock>& blocks() const { return blocks_; }
  const std::vector<int>& weights() const { return weights_; }
  bool standard_graded() const;
  const MonomialOrder& default_order() const { return order_; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t block_of(std::size_t var) const;

  /// Same variables, field and weights (blocks are not compared).
  bool compatible(const PolyRing& other) const;

  std::string description() const;

 private:
  std::vector<std::string> names_;
  CoefficientField field_;
  std::vector<VariableBlock> blocks_;
  std::vector<int> weights_;
  MonomialOrder order_;
};

/// `base` with extra variables in a new block, placed before (front) or after
/// the existing blocks.
RingPtr with_extra_variables(const RingPtr& base, const std::vector<std::string>& names,
                             const std::vector<int>& weights, bool front);

/// `stem`, or `stem` followed by underscores, not used as a variable name.
std::string fresh_name(const PolyRing& ring, std::string stem);

/// True when the rings are the same object or structurally compatible.
bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace symrees
