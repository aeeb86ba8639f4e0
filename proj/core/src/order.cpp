#include "symrees/order.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "symrees/errors.hpp"

namespace symrees {

namespace {

std::vector<int> iota_vars(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::string join(const std::vector<int>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

}  // namespace

MonomialOrder::MonomialOrder(Kind kind, std::size_t nvars, std::vector<Step> steps, std::string text)
    : kind_(kind), nvars_(nvars), steps_(std::move(steps)), text_(std::move(text)) {
  if (nvars_ > kMaxVariables) throw DomainError("too many variables for a monomial order");
  if (steps_.size() == 2 && steps_[0].type == Step::Type::Weight && steps_[1].type == Step::Type::RevLex &&
      steps_[1].variables == iota_vars(nvars_)) {
    simple_grevlex_ = true;
    simple_weights_ = steps_[0].weights;
  }
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
  return MonomialOrder(Kind::Lex, nvars, {Step{Step::Type::Lex, {}, iota_vars(nvars)}}, "lex");
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
  return weighted(std::vector<int>(nvars, 1));
}

MonomialOrder MonomialOrder::weighted(std::vector<int> weights) {
  const std::size_t n = weights.size();
  for (int w : weights)
    if (w <= 0) throw DomainError("order weights must be positive");
  const bool standard = std::all_of(weights.begin(), weights.end(), [](int w) { return w == 1; });
  std::string text = standard ? "grevlex" : "weighted(" + join(weights) + ")";
  return MonomialOrder(standard ? Kind::Grevlex : Kind::Weighted, n,
                       {Step{Step::Type::Weight, std::move(weights), {}}, Step{Step::Type::RevLex, {}, iota_vars(n)}},
                       std::move(text));
}

MonomialOrder MonomialOrder::weighted_permuted(std::vector<int> weights, std::vector<int> scan) {
  const std::size_t n = weights.size();
  if (scan.size() != n) throw DomainError("scan list must mention every variable");
  for (int w : weights)
    if (w <= 0) throw DomainError("order weights must be positive");
  std::string text = "grevlex[" + join(scan) + "](" + join(weights) + ")";
  return MonomialOrder(Kind::Custom, n,
                       {Step{Step::Type::Weight, std::move(weights), {}}, Step{Step::Type::RevLex, {}, std::move(scan)}},
                       std::move(text));
}

MonomialOrder MonomialOrder::block_elimination(const std::vector<std::size_t>& block_sizes, std::vector<int> weights) {
  const std::size_t n = std::accumulate(block_sizes.begin(), block_sizes.end(), std::size_t{0});
  if (weights.empty()) weights.assign(n, 1);
  if (weights.size() != n) throw DomainError("weight vector does not match block sizes");
  std::vector<Step> steps;
  std::size_t first = 0;
  std::ostringstream text;
  text << "block(";
  for (std::size_t b = 0; b < block_sizes.size(); ++b) {
    const std::size_t size = block_sizes[b];
    std::vector<int> w(n, 0);
    std::vector<int> vars;
    for (std::size_t i = first; i < first + size; ++i) {
      if (weights[i] <= 0) throw DomainError("order weights must be positive");
      w[i] = weights[i];
      vars.push_back(static_cast<int>(i));
    }
    steps.push_back(Step{Step::Type::Weight, std::move(w), {}});
    steps.push_back(Step{Step::Type::RevLex, {}, std::move(vars)});
    text << (b ? "," : "") << size;
    first += size;
  }
  text << ";" << join(weights) << ")";
  return MonomialOrder(Kind::BlockElimination, n, std::move(steps), text.str());
}

MonomialOrder MonomialOrder::elimination(std::vector<int> weights, std::vector<int> eliminate) {
  const std::size_t n = weights.size();
  std::vector<int> first_w(n, 0), rest_w(n, 0), rest;
  std::vector<char> in_first(n, 0);
  for (int v : eliminate) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw DomainError("elimination variable out of range");
    in_first[v] = 1;
  }
  std::vector<int> first;
  for (std::size_t i = 0; i < n; ++i) {
    if (weights[i] <= 0) throw DomainError("order weights must be positive");
    if (in_first[i]) {
      first.push_back(static_cast<int>(i));
      first_w[i] = weights[i];
    } else {
      rest.push_back(static_cast<int>(i));
      rest_w[i] = weights[i];
    }
  }
  std::string text = "elim[" + join(first) + "](" + join(weights) + ")";
  return MonomialOrder(Kind::BlockElimination, n,
                       {Step{Step::Type::Weight, std::move(first_w), {}}, Step{Step::Type::RevLex, {}, std::move(first)},
                        Step{Step::Type::Weight, std::move(rest_w), {}}, Step{Step::Type::RevLex, {}, std::move(rest)}},
                       std::move(text));
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (simple_grevlex_) {
    int da = 0, db = 0;
    for (std::size_t i = 0; i < nvars_; ++i) {
      da += simple_weights_[i] * a[i];
      db += simple_weights_[i] * b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = nvars_; i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }
  for (const Step& step : steps_) {
    switch (step.type) {
      case Step::Type::Weight: {
        long da = 0, db = 0;
        for (std::size_t i = 0; i < step.weights.size(); ++i) {
          if (step.weights[i] == 0) continue;
          da += long(step.weights[i]) * a[i];
          db += long(step.weights[i]) * b[i];
        }
        if (da != db) return da < db ? -1 : 1;
        break;
      }
      case Step::Type::RevLex:
        for (std::size_t k = step.variables.size(); k-- > 0;) {
          const int v = step.variables[k];
          if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
        }
        break;
      case Step::Type::Lex:
        for (int v : step.variables) {
          if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
        }
        break;
    }
  }
  return 0;
}

std::string MonomialOrder::description() const { return text_; }

}  // namespace symrees
