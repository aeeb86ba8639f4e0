#include "symrees/ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "symrees/errors.hpp"

namespace symrees {

PolyRing::PolyRing(std::vector<std::string> names, CoefficientField field, std::vector<std::size_t> block_sizes,
                   std::vector<int> weights)
    : names_(std::move(names)), field_(field), weights_(std::move(weights)) {
  if (names_.size() > kMaxVariables)
    throw DomainError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw DomainError("empty variable name");
    if (!seen.insert(n).second) throw DomainError("duplicate variable name '" + n + "'");
  }
  if (weights_.empty()) weights_.assign(names_.size(), 1);
  if (weights_.size() != names_.size()) throw DomainError("weight vector does not match variable count");
  for (int w : weights_)
    if (w <= 0) throw DomainError("variable weights must be positive");
  if (block_sizes.empty()) block_sizes.push_back(names_.size());
  if (std::accumulate(block_sizes.begin(), block_sizes.end(), std::size_t{0}) != names_.size())
    throw DomainError("blocks must partition the variables");
  std::size_t first = 0;
  for (auto s : block_sizes) {
    blocks_.push_back({first, s});
    first += s;
  }
  order_ = MonomialOrder::weighted(weights_);
}

RingPtr PolyRing::make(std::vector<std::string> names, CoefficientField field, std::vector<std::size_t> block_sizes,
                       std::vector<int> weights) {
  return std::make_shared<const PolyRing>(std::move(names), field, std::move(block_sizes), std::move(weights));
}

std::vector<std::string> PolyRing::indexed_names(std::string_view prefix, std::size_t count, std::size_t first) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(std::string(prefix) + std::to_string(first + i));
  return out;
}

bool PolyRing::standard_graded() const {
  return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t PolyRing::block_of(std::size_t var) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    if (var >= blocks_[b].first && var < blocks_[b].first + blocks_[b].size) return b;
  throw DomainError("variable index out of range");
}

bool PolyRing::compatible(const PolyRing& other) const {
  return names_ == other.names_ && field_ == other.field_ && weights_ == other.weights_;
}

std::string PolyRing::description() const {
  std::ostringstream out;
  out << field_.name() << "[";
  for (std::size_t i = 0; i < names_.size(); ++i) out << (i ? "," : "") << names_[i];
  out << "]";
  return out.str();
}

RingPtr with_extra_variables(const RingPtr& base, const std::vector<std::string>& names,
                             const std::vector<int>& weights, bool front) {
  if (weights.size() != names.size()) throw DomainError("one weight per new variable is required");
  std::vector<std::string> all;
  std::vector<int> w;
  std::vector<std::size_t> blocks;
  if (front) {
    all = names;
    w = weights;
    blocks.push_back(names.size());
  }
  all.insert(all.end(), base->names().begin(), base->names().end());
  w.insert(w.end(), base->weights().begin(), base->weights().end());
  for (const auto& b : base->blocks()) blocks.push_back(b.size);
  if (!front) {
    all.insert(all.end(), names.begin(), names.end());
    w.insert(w.end(), weights.begin(), weights.end());
    blocks.push_back(names.size());
  }
  return PolyRing::make(std::move(all), base->field(), std::move(blocks), std::move(w));
}

std::string fresh_name(const PolyRing& ring, std::string stem) {
  while (ring.index_of(stem)) stem += "_";
  return stem;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->compatible(*b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw RingMismatchError();
}

}  // namespace symrees
