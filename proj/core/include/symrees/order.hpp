#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "symrees/monomial.hpp"

namespace symrees {

/// A monomial order described as a short program of comparison steps.
///
/// Each step either compares a weighted degree (larger wins), a reverse
/// lexicographic scan over a list of variables (scanning from the last listed
/// variable, the smaller exponent wins) or a lexicographic scan (larger
/// exponent wins). grevlex, lex, product/elimination orders and weighted
/// orders are all expressible this way.
class MonomialOrder {
 public:
  enum class Kind { Lex, Grevlex, BlockElimination, Weighted, Custom };

  struct Step {
    enum class Type { Weight, RevLex, Lex } type;
    std::vector<int> weights;    // Weight steps: one entry per variable
    std::vector<int> variables;  // RevLex/Lex steps: scan list
    friend bool operator==(const Step&, const Step&) = default;
  };

  MonomialOrder() = default;

  static MonomialOrder lex(std::size_t nvars);
  static MonomialOrder grevlex(std::size_t nvars);
  /// Weighted degree first, then reverse lexicographic tie-break.
  static MonomialOrder weighted(std::vector<int> weights);
  /// Weighted grevlex over a permuted variable list; the last entry of
  /// `scan` is the smallest variable.
  static MonomialOrder weighted_permuted(std::vector<int> weights, std::vector<int> scan);
  /// Product of weighted grevlex orders, one per contiguous block. Earlier
  /// blocks dominate, so an ideal's basis under this order eliminates them.
  static MonomialOrder block_elimination(const std::vector<std::size_t>& block_sizes,
                                         std::vector<int> weights = {});

  /// Weighted grevlex on the variables in `eliminate` first, then weighted
  /// grevlex on the others; eliminates the listed variables.
  static MonomialOrder elimination(std::vector<int> weights, std::vector<int> eliminate);

  Kind kind() const { return kind_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Step>& steps() const { return steps_; }

  /// Negative if a < b, zero if equal, positive if a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string description() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.nvars_ == b.nvars_ && a.steps_ == b.steps_;
  }

 private:
  MonomialOrder(Kind kind, std::size_t nvars, std::vector<Step> steps, std::string text);

  Kind kind_ = Kind::Grevlex;
  std::size_t nvars_ = 0;
  std::vector<Step> steps_;
  std::string text_;
  // Fast path for plain grevlex over 0..n-1 with the given weights.
  bool simple_grevlex_ = false;
  std::vector<int> simple_weights_;
};

}  // namespace symrees
