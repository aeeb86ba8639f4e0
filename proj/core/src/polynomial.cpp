#include "symrees/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace symrees {

namespace {

const RingPtr& require_ring(const RingPtr& r) {
  if (!r) throw DomainError("polynomial has no ring");
  return r;
}

// Sorts descending under the ring order and merges equal monomials.
void canonicalize(const RingPtr& ring, std::vector<Polynomial::Term>& terms) {
  const MonomialOrder& order = ring->default_order();
  const CoefficientField& field = ring->field();
  for (auto& t : terms) field.reduce_in_place(t.coeff);
  std::sort(terms.begin(), terms.end(), [&](const Polynomial::Term& a, const Polynomial::Term& b) {
    return order.compare(a.monomial, b.monomial) > 0;
  });
  std::vector<Polynomial::Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
      field.reduce_in_place(out.back().coeff);
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms = std::move(out);
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  require_ring(ring);
  Scalar v = ring->field().reduce(c);
  if (v == 0) return Polynomial(std::move(ring));
  return Polynomial(std::move(ring), std::vector<Term>{Term{Monomial{}, v}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  require_ring(ring);
  if (index >= ring->nvars()) throw DomainError("variable index out of range");
  return Polynomial(std::move(ring), std::vector<Term>{Term{Monomial::variable(index), Scalar(1)}});
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Scalar& c) {
  require_ring(ring);
  Scalar v = ring->field().reduce(c);
  if (v == 0) return Polynomial(std::move(ring));
  return Polynomial(std::move(ring), std::vector<Term>{Term{m, v}});
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  require_ring(ring);
  canonicalize(ring, terms);
  return Polynomial(std::move(ring), std::move(terms));
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

const Polynomial::Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.front();
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  const auto& w = ring_->weights();
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.monomial.weighted_degree(w));
  return d;
}

int Polynomial::block_degree(std::size_t block) const {
  if (terms_.empty()) return -1;
  const VariableBlock b = ring_->blocks().at(block);
  const auto& w = ring_->weights();
  int best = -1;
  for (const auto& t : terms_) {
    int d = 0;
    for (std::size_t i = b.first; i < b.first + b.size; ++i) d += w[i] * t.monomial[i];
    best = std::max(best, d);
  }
  return best;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto& w = ring_->weights();
  const int d = terms_.front().monomial.weighted_degree(w);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.monomial.weighted_degree(w) == d; });
}

bool Polynomial::is_homogeneous_in(std::size_t first, std::size_t count) const {
  if (terms_.empty()) return true;
  const auto& w = ring_->weights();
  auto deg = [&](const Monomial& m) {
    int d = 0;
    for (std::size_t i = first; i < first + count; ++i) d += w[i] * m[i];
    return d;
  };
  const int d = deg(terms_.front().monomial);
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return deg(t.monomial) == d; });
}

void Polynomial::add_scaled(const Polynomial& other, const Scalar& factor) {
  if (other.terms_.empty()) return;
  if (!ring_) ring_ = other.ring_;
  require_same_ring(ring_, other.ring_);
  const MonomialOrder& order = ring_->default_order();
  const CoefficientField& field = ring_->field();
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    int c;
    if (i == terms_.size())
      c = -1;
    else if (j == other.terms_.size())
      c = 1;
    else
      c = order.compare(terms_[i].monomial, other.terms_[j].monomial);
    if (c > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      Scalar v = other.terms_[j].coeff * factor;
      field.reduce_in_place(v);
      if (v != 0) out.push_back(Term{other.terms_[j].monomial, std::move(v)});
      ++j;
    } else {
      Scalar v = terms_[i].coeff + other.terms_[j].coeff * factor;
      field.reduce_in_place(v);
      if (v != 0) out.push_back(Term{terms_[i].monomial, std::move(v)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  add_scaled(other, Scalar(1));
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  add_scaled(other, Scalar(-1));
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_ ? a.ring_ : b.ring_);
  std::vector<Polynomial::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) terms.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
  return Polynomial::from_terms(a.ring_, std::move(terms));
}

Polynomial operator*(const Scalar& c, const Polynomial& p) { return p.scaled(c); }

Polynomial Polynomial::operator-() const { return scaled(Scalar(-1)); }

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (!ring_) return *this;
  const Scalar v = ring_->field().reduce(c);
  if (v == 0) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) {
    t.coeff *= v;
    ring_->field().reduce_in_place(t.coeff);
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Scalar& c) const {
  if (!ring_) return *this;
  const Scalar v = ring_->field().reduce(c);
  if (v == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Scalar k = t.coeff * v;
    ring_->field().reduce_in_place(k);
    out.push_back({t.monomial * m, std::move(k)});
  }
  // Multiplying by a monomial preserves the order of the terms.
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(require_ring(ring_), Scalar(1));
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

Polynomial Polynomial::normalized() const {
  if (terms_.empty()) return *this;
  if (!ring_->field().is_rational()) return monic();
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Scalar factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (terms_.front().coeff < 0) factor = -factor;
  return scaled(factor);
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->field().inverse(terms_.front().coeff));
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coeff;
  return Scalar(0);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (negative)
      out << "-";
    else if (!first)
      out << "+";
    first = false;
    const bool unit = (c == 1);
    const bool constant_term = t.monomial.is_one();
    if (!unit || constant_term) {
      out << c.get_str();
      if (!constant_term) out << "*";
    }
    bool first_factor = true;
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      const int e = t.monomial[i];
      if (e == 0) continue;
      if (!first_factor) out << "*";
      first_factor = false;
      out << ring_->name(i);
      if (e > 1) out << "^" << e;
    }
  }
  return out.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (!a.terms_.empty() && !same_ring(a.ring_, b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
  const RingPtr& ring = require_ring(f.ring());
  if (images.size() < ring->nvars()) throw DomainError("substitute: missing image for a variable");
  RingPtr target;
  for (const auto& img : images) {
    if (!img.ring()) throw DomainError("substitute: image without ring");
    if (!target)
      target = img.ring();
    else
      require_same_ring(target, img.ring());
  }
  if (!target) throw DomainError("substitute: no images");
  // Cache of powers per variable.
  std::vector<std::vector<Polynomial>> powers(ring->nvars());
  auto power = [&](std::size_t v, int e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, Scalar(1)));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };
  Polynomial result(target);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t v = 0; v < ring->nvars(); ++v) {
      const int e = t.monomial[v];
      if (e > 0) term = term * power(v, e);
    }
    result += term;
  }
  return result;
}

Polynomial remap(const Polynomial& f, const RingPtr& target, std::span<const int> index_map) {
  require_ring(target);
  const RingPtr& ring = require_ring(f.ring());
  std::vector<Polynomial::Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t v = 0; v < ring->nvars(); ++v) {
      const int e = t.monomial[v];
      if (e == 0) continue;
      if (v >= index_map.size() || index_map[v] < 0)
        throw DomainError("remap: variable '" + ring->name(v) + "' has no image");
      m.set(index_map[v], m[index_map[v]] + e);
    }
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial remap_by_name(const Polynomial& f, const RingPtr& target) {
  const RingPtr& ring = require_ring(f.ring());
  std::vector<int> map(ring->nvars(), -1);
  for (std::size_t v = 0; v < ring->nvars(); ++v) {
    if (auto idx = target->index_of(ring->name(v))) map[v] = static_cast<int>(*idx);
  }
  return remap(f, target, map);
}

namespace {

// Division by a single polynomial; returns nullopt-equivalent via flag.
bool try_divide(const Polynomial& f, const Polynomial& g, Polynomial& quotient) {
  require_same_ring(f.ring(), g.ring());
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  const RingPtr& ring = f.ring();
  const CoefficientField& field = ring->field();
  const auto& lt = g.leading_term();
  const Scalar inv = field.inverse(lt.coeff);
  Polynomial rem = f;
  std::vector<Polynomial::Term> q;
  while (!rem.is_zero()) {
    const auto& t = rem.leading_term();
    if (!lt.monomial.divides(t.monomial)) return false;
    const Monomial m = t.monomial / lt.monomial;
    Scalar c = t.coeff * inv;
    field.reduce_in_place(c);
    q.push_back({m, c});
    rem -= g.times_monomial(m, c);
  }
  quotient = Polynomial::from_terms(ring, std::move(q));
  return true;
}

}  // namespace

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  Polynomial q;
  if (!try_divide(f, g, q)) throw NotDivisibleError("exact_divide: " + g.to_string() + " does not divide " + f.to_string());
  return q;
}

bool divides(const Polynomial& g, const Polynomial& f) {
  Polynomial q;
  return try_divide(f, g, q);
}

Polynomial divide_remainder(const Polynomial& f, std::span<const Polynomial> divisors) {
  const RingPtr& ring = require_ring(f.ring());
  const CoefficientField& field = ring->field();
  Polynomial p = f;
  std::vector<Polynomial::Term> rem;
  while (!p.is_zero()) {
    const auto lt = p.leading_term();
    bool reduced = false;
    for (const auto& g : divisors) {
      if (g.is_zero()) continue;
      if (g.leading_monomial().divides(lt.monomial)) {
        Scalar c = lt.coeff * field.inverse(g.leading_coeff());
        field.reduce_in_place(c);
        p -= g.times_monomial(lt.monomial / g.leading_monomial(), c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.push_back(lt);
      p -= Polynomial::monomial(ring, lt.monomial, lt.coeff);
    }
  }
  return Polynomial::from_terms(ring, std::move(rem));
}

std::vector<int> bidegree(const Polynomial& f) {
  const RingPtr& ring = require_ring(f.ring());
  if (ring->blocks().size() < 2) throw DomainError("bidegree requires a ring with at least two blocks");
  if (f.is_zero()) throw NotHomogeneousError("the zero polynomial has no bidegree");
  std::vector<int> out;
  for (std::size_t b = 0; b < ring->blocks().size(); ++b) {
    const auto& blk = ring->blocks()[b];
    if (!f.is_homogeneous_in(blk.first, blk.size))
      throw NotHomogeneousError("polynomial is not homogeneous in block " + std::to_string(b));
    out.push_back(f.block_degree(b));
  }
  return out;
}

Monomial monomial_content(const Polynomial& f) {
  if (f.is_zero()) return Monomial{};
  Monomial g = f.terms().front().monomial;
  for (const auto& t : f.terms()) g = Monomial::gcd(g, t.monomial);
  return g;
}

Polynomial derivative(const Polynomial& f, std::size_t var) {
  const RingPtr& ring = require_ring(f.ring());
  std::vector<Polynomial::Term> terms;
  for (const auto& t : f.terms()) {
    const int e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    terms.push_back({m, t.coeff * e});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

// ---------------------------------------------------------------------------
// Parser

ParseError::ParseError(std::string message, std::size_t line, std::size_t column)
    : AlgebraError(message + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
      line_(line),
      column_(column) {}

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    skip_ws();
    Polynomial acc(ring_);
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Polynomial t = term();
    acc = negate ? -t : t;
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        skip_ws();
        const std::size_t at = pos_;
        Polynomial d = factor();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          fail("division is only supported by a nonzero constant");
        }
        acc = acc.scaled(ring_->field().inverse(d.terms().front().coeff));
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an exponent");
      const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 1000) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class n(std::string(text_.substr(start, pos_ - start)));
      return Polynomial::constant(ring_, Scalar(n));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, *idx);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  require_ring(ring);
  return ExprParser(text, ring).parse();
}

}  // namespace symrees
