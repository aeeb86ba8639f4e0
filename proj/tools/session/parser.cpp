#include <cctype>
#include <map>
#include <sstream>

#include "session.hpp"
#include "symrees/ideal.hpp"

namespace symrees::session {

namespace {

struct Arity {
  std::vector<char> args;  // 'I' ideal, 'M' matrix, 'n' integer
  std::vector<std::string> options;
  bool sat = false;
};

const std::map<std::string, Arity>& verbs() {
  static const std::map<std::string, Arity> table{
      {"inverse", {{'I'}, {"maxdeg"}, false}},
      {"invfactor", {{'I'}, {"maxdeg"}, false}},
      {"rees", {{'I'}, {}, false}},
      {"sympow", {{'I', 'n'}, {}, true}},
      {"symrees", {{'I'}, {"lmax", "maxdeg"}, true}},
      {"appendix", {{'M'}, {}, false}},
      {"template", {{'n', 'n'}, {"seed", "retries"}, false}},
  };
  return table;
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {
    for (std::size_t i = 0; i < text_.size(); ++i)
      if (text_[i] == '\n') line_starts_.push_back(i + 1);
  }

  Script parse() {
    Script s;
    bool have_ring = false;
    std::size_t begin = 0;
    while (true) {
      const std::size_t end = statement_end(begin);
      if (end == text_.size()) {
        std::size_t p = skip_space(begin, end);
        if (p != end) fail(p, "missing ';' after statement");
        break;
      }
      std::size_t p = skip_space(begin, end);
      if (p == end) fail(end, "empty statement");
      cur_ = p;
      end_ = end;
      const std::string word = ident("a statement keyword");
      if (word == "ring") {
        if (have_ring) fail(p, "a session declares a single ring");
        s.ring = parse_ring();
        ring_ = s.ring.ring;
        have_ring = true;
      } else {
        if (!have_ring) fail(p, "expected a ring declaration first");
        if (word == "poly")
          s.statements.emplace_back(parse_poly());
        else if (word == "ideal")
          s.statements.emplace_back(parse_ideal());
        else if (word == "matrix")
          s.statements.emplace_back(parse_matrix());
        else if (verbs().count(word))
          s.statements.emplace_back(parse_command(word, p));
        else
          fail(p, "unknown statement '" + word + "'");
      }
      begin = end + 1;
    }
    if (!have_ring) fail(0, "expected a ring declaration");
    return s;
  }

 private:
  [[noreturn]] void fail(std::size_t offset, const std::string& msg) const {
    const Position pos = position(offset);
    throw ParseError(msg, pos.line, pos.column);
  }

  Position position(std::size_t offset) const {
    const auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
    const std::size_t line = static_cast<std::size_t>(it - line_starts_.begin());
    return {line, offset - line_starts_[line - 1] + 1};
  }

  // Offset of the ';' closing the statement that starts at `from`, or the end
  // of the text. Comments run from '#' to the end of the line.
  std::size_t statement_end(std::size_t from) const {
    int depth = 0;
    for (std::size_t i = from; i < text_.size(); ++i) {
      const char c = text_[i];
      if (c == '#') {
        while (i < text_.size() && text_[i] != '\n') ++i;
        continue;
      }
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') --depth;
      if (c == ';' && depth <= 0) return i;
    }
    return text_.size();
  }

  std::size_t skip_space(std::size_t p, std::size_t end) const {
    while (p < end) {
      if (text_[p] == '#') {
        while (p < end && text_[p] != '\n') ++p;
      } else if (std::isspace(static_cast<unsigned char>(text_[p]))) {
        ++p;
      } else {
        break;
      }
    }
    return p;
  }

  void skip() { cur_ = skip_space(cur_, end_); }
  bool at_end() {
    skip();
    return cur_ >= end_;
  }

  std::string ident(const char* what) {
    skip();
    if (cur_ >= end_ || !is_ident_start(text_[cur_])) fail(cur_, std::string("expected ") + what);
    const std::size_t b = cur_;
    while (cur_ < end_ && is_ident_char(text_[cur_])) ++cur_;
    return std::string(text_.substr(b, cur_ - b));
  }

  void expect(char c) {
    skip();
    if (cur_ >= end_ || text_[cur_] != c) fail(cur_, std::string("expected '") + c + "'");
    ++cur_;
  }

  bool accept(char c) {
    skip();
    if (cur_ < end_ && text_[cur_] == c) {
      ++cur_;
      return true;
    }
    return false;
  }

  std::int64_t integer(const char* what) {
    skip();
    const std::size_t b = cur_;
    if (cur_ < end_ && text_[cur_] == '-') ++cur_;
    while (cur_ < end_ && std::isdigit(static_cast<unsigned char>(text_[cur_]))) ++cur_;
    if (cur_ == b || (cur_ == b + 1 && text_[b] == '-')) fail(b, std::string("expected ") + what);
    return std::stoll(std::string(text_.substr(b, cur_ - b)));
  }

  // Text up to the statement end, trimmed; sets `at` to its first offset.
  std::string_view rest(std::size_t& at) {
    skip();
    at = cur_;
    std::size_t e = end_;
    while (e > at && std::isspace(static_cast<unsigned char>(text_[e - 1]))) --e;
    cur_ = end_;
    return text_.substr(at, e - at);
  }

  Polynomial polynomial(std::string_view item, std::size_t at) {
    if (item.empty()) fail(at, "expected a polynomial");
    if (auto it = polys_.find(std::string(item)); it != polys_.end()) return it->second;
    // Bound names inside an expression are replaced by their parenthesized
    // values; error positions then refer to the start of the item.
    std::string expanded;
    bool substituted = false;
    for (std::size_t i = 0; i < item.size();) {
      if (!is_ident_start(item[i]) || (i > 0 && is_ident_char(item[i - 1]))) {
        expanded += item[i++];
        continue;
      }
      std::size_t j = i;
      while (j < item.size() && is_ident_char(item[j])) ++j;
      const std::string word(item.substr(i, j - i));
      const auto it = polys_.find(word);
      if (it != polys_.end() && !ring_->index_of(word)) {
        expanded += "(" + it->second.to_string() + ")";
        substituted = true;
      } else {
        expanded += word;
      }
      i = j;
    }
    try {
      return parse_polynomial(expanded, ring_);
    } catch (const ParseError& e) {
      std::string msg = e.what();
      if (const auto cut = msg.rfind(" at line "); cut != std::string::npos) msg.resize(cut);
      if (substituted) fail(at, msg);
      // Map the position inside `item` back to the script.
      std::size_t off = at, line = 1;
      while (line < e.line() && off < at + item.size()) {
        if (text_[off] == '\n') ++line;
        ++off;
      }
      fail(off + e.column() - 1, msg);
    }
  }

  // Comma-separated polynomials at parenthesis depth 0.
  std::vector<Polynomial> polynomial_list(std::string_view list, std::size_t at) {
    std::vector<Polynomial> out;
    int depth = 0;
    std::size_t b = 0;
    for (std::size_t i = 0; i <= list.size(); ++i) {
      if (i < list.size()) {
        if (list[i] == '(') ++depth;
        if (list[i] == ')') --depth;
        if (list[i] != ',' || depth > 0) continue;
      }
      std::size_t s = b, e = i;
      while (s < e && std::isspace(static_cast<unsigned char>(list[s]))) ++s;
      while (e > s && std::isspace(static_cast<unsigned char>(list[e - 1]))) --e;
      out.push_back(polynomial(list.substr(s, e - s), at + (s < e ? s : i)));
      b = i + 1;
    }
    return out;
  }

  RingDecl parse_ring() {
    RingDecl d;
    d.name = ident("a ring name");
    expect('=');
    const std::size_t fpos = (skip(), cur_);
    const std::string fname = ident("QQ or Fp(p)");
    CoefficientField field;
    if (fname == "Fp") {
      expect('(');
      const std::size_t ppos = (skip(), cur_);
      const std::int64_t p = integer("a prime");
      if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(static_cast<std::uint64_t>(p)))
        fail(ppos, "the characteristic must be a prime below 2^31");
      expect(')');
      field = CoefficientField::prime(static_cast<std::uint32_t>(p));
    } else if (fname != "QQ") {
      fail(fpos, "expected QQ or Fp(p)");
    }
    expect('[');
    std::vector<std::string> names;
    do {
      const std::size_t vpos = (skip(), cur_);
      const std::string first = ident("a variable name");
      skip();
      if (text_.substr(cur_, 2) == "..") {
        cur_ += 2;
        const std::string last = ident("a variable name");
        auto split = [](const std::string& v) {
          std::size_t k = v.size();
          while (k > 0 && std::isdigit(static_cast<unsigned char>(v[k - 1]))) --k;
          return std::pair{v.substr(0, k), v.substr(k)};
        };
        const auto [p1, n1] = split(first);
        const auto [p2, n2] = split(last);
        if (p1 != p2 || n1.empty() || n2.empty() || std::stoul(n1) > std::stoul(n2))
          fail(vpos, "a variable range needs the form x0..x4");
        const std::size_t lo = std::stoul(n1), hi = std::stoul(n2);
        for (const auto& v : PolyRing::indexed_names(p1, hi - lo + 1, lo)) names.push_back(v);
      } else {
        names.push_back(first);
      }
    } while (accept(','));
    expect(']');
    if (!at_end()) fail(cur_, "unexpected text after the ring declaration");
    try {
      d.ring = PolyRing::make(names, field);
    } catch (const AlgebraError& e) {
      fail(fpos, e.what());
    }
    return d;
  }

  PolyBinding parse_poly() {
    PolyBinding b;
    b.name = ident("a name");
    expect('=');
    std::size_t at = 0;
    const auto text = rest(at);
    b.value = polynomial(text, at);
    polys_[b.name] = b.value;
    kinds_[b.name] = 'P';
    return b;
  }

  IdealBinding parse_ideal() {
    IdealBinding b;
    b.name = ident("a name");
    expect('=');
    skip();
    const std::size_t save = cur_;
    if (cur_ < end_ && is_ident_start(text_[cur_]) && ident("") == "minors" && accept('(')) {
      const std::size_t kpos = (skip(), cur_);
      const std::int64_t k = integer("the minor size");
      expect(',');
      const std::size_t mpos = (skip(), cur_);
      const std::string m = ident("a matrix name");
      expect(')');
      if (!at_end()) fail(cur_, "unexpected text after minors(...)");
      const auto it = matrices_.find(m);
      if (it == matrices_.end()) fail(mpos, "unbound matrix '" + m + "'");
      if (k < 1 || static_cast<std::size_t>(k) > std::min(it->second.rows(), it->second.cols()))
        fail(kpos, "minor size out of range");
      b.minors = std::pair{static_cast<std::size_t>(k), m};
      b.gens = minors(it->second, static_cast<std::size_t>(k)).generators();
    } else {
      cur_ = save;
      std::size_t at = 0;
      const auto text = rest(at);
      if (text.empty()) fail(end_, "expected a polynomial");
      b.gens = polynomial_list(text, at);
    }
    kinds_[b.name] = 'I';
    return b;
  }

  MatrixBinding parse_matrix() {
    MatrixBinding b;
    b.name = ident("a name");
    expect('[');
    const std::size_t rpos = (skip(), cur_);
    const std::int64_t r = integer("a row count");
    expect(']');
    expect('[');
    const std::int64_t c = integer("a column count");
    expect(']');
    if (r < 1 || c < 1) fail(rpos, "matrix dimensions must be positive");
    expect('=');
    std::size_t at = 0;
    const auto text = rest(at);
    if (text.empty()) fail(end_, "expected matrix entries");
    const auto entries = polynomial_list(text, at);
    if (entries.size() != static_cast<std::size_t>(r * c))
      fail(at, "matrix " + b.name + " needs " + std::to_string(r * c) + " entries, got " +
                   std::to_string(entries.size()));
    b.value = FormMatrix(ring_, r, c);
    for (std::int64_t i = 0; i < r; ++i)
      for (std::int64_t j = 0; j < c; ++j) b.value(i, j) = entries[i * c + j];
    matrices_[b.name] = b.value;
    kinds_[b.name] = 'M';
    return b;
  }

  // Whitespace-separated words at parenthesis depth 0.
  std::vector<std::pair<std::string, std::size_t>> words() {
    std::vector<std::pair<std::string, std::size_t>> out;
    while (!at_end()) {
      const std::size_t b = cur_;
      int depth = 0;
      while (cur_ < end_) {
        const char c = text_[cur_];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && (std::isspace(static_cast<unsigned char>(c)) || c == '#')) break;
        ++cur_;
      }
      out.emplace_back(std::string(text_.substr(b, cur_ - b)), b);
    }
    return out;
  }

  SatSpec sat(const std::string& v, std::size_t at) {
    SatSpec s;
    if (v == "m") return s;
    if (v == "min") {
      s.kind = SatSpec::Kind::MinimalPrimes;
      return s;
    }
    if (v == "unm") {
      s.kind = SatSpec::Kind::Unmixed;
      return s;
    }
    if (auto k = kinds_.find(v); k != kinds_.end() && k->second == 'I') {
      s.kind = SatSpec::Kind::Ideal;
      s.ideal_name = v;
      return s;
    }
    s.kind = SatSpec::Kind::Element;
    s.element = polynomial(v, at);
    return s;
  }

  Command parse_command(const std::string& verb, std::size_t pos) {
    const Arity& a = verbs().at(verb);
    Command c;
    c.verb = verb;
    c.pos = position(pos);
    for (const auto& [w, at] : words()) {
      const auto eq = w.find('=');
      if (eq == std::string::npos) {
        if (c.args.size() == a.args.size())
          fail(at, verb + " takes " + std::to_string(a.args.size()) + " argument(s)");
        const char kind = a.args[c.args.size()];
        if (kind == 'n') {
          if (w.empty() || w.find_first_not_of("0123456789") != std::string::npos) fail(at, "expected an integer");
        } else {
          if (!is_ident_start(w[0])) fail(at, "expected a name");
          const auto k = kinds_.find(w);
          if (k == kinds_.end()) fail(at, "unbound name '" + w + "'");
          if (k->second != kind) fail(at, "'" + w + "' is not " + (kind == 'I' ? "an ideal" : "a matrix"));
        }
        c.args.push_back(w);
        continue;
      }
      const std::string key = w.substr(0, eq), value = w.substr(eq + 1);
      if (key == "sat" && a.sat) {
        if (c.sat) fail(at, "sat given twice");
        if (value.empty()) fail(at + eq + 1, "expected a saturation target");
        c.sat = sat(value, at + eq + 1);
        continue;
      }
      if (std::find(a.options.begin(), a.options.end(), key) == a.options.end())
        fail(at, "unknown option '" + key + "' for " + verb);
      if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
        fail(at + eq + 1, "expected a non-negative integer");
      c.options.emplace_back(key, std::stoll(value));
    }
    if (c.args.size() != a.args.size())
      fail(end_, verb + " takes " + std::to_string(a.args.size()) + " argument(s)");
    return c;
  }

  std::string_view text_;
  std::vector<std::size_t> line_starts_{0};
  std::size_t cur_ = 0, end_ = 0;
  RingPtr ring_;
  std::map<std::string, char> kinds_;
  std::map<std::string, Polynomial> polys_;
  std::map<std::string, FormMatrix> matrices_;
};

std::string join(const std::vector<Polynomial>& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? ", " : "") + ps[i].to_string();
  return out;
}

}  // namespace

std::optional<std::int64_t> Command::option(std::string_view key) const {
  for (const auto& [k, v] : options)
    if (k == key) return v;
  return std::nullopt;
}

std::size_t Script::command_count() const {
  std::size_t n = 0;
  for (const auto& s : statements) n += std::holds_alternative<Command>(s);
  return n;
}

Script parse(std::string_view text) { return Parser(text).parse(); }

std::string print(const Command& c) {
  std::string out = c.verb;
  for (const auto& a : c.args) out += " " + a;
  for (const auto& [k, v] : c.options) out += " " + k + "=" + std::to_string(v);
  if (c.sat) {
    out += " sat=";
    switch (c.sat->kind) {
      case SatSpec::Kind::Irrelevant: out += "m"; break;
      case SatSpec::Kind::MinimalPrimes: out += "min"; break;
      case SatSpec::Kind::Unmixed: out += "unm"; break;
      case SatSpec::Kind::Ideal: out += c.sat->ideal_name; break;
      case SatSpec::Kind::Element: out += "(" + c.sat->element->to_string() + ")"; break;
    }
  }
  return out;
}

std::string print(const Script& s) {
  std::ostringstream out;
  const PolyRing& R = *s.ring.ring;
  out << "ring " << s.ring.name << " = " << R.field().name() << "[";
  for (std::size_t i = 0; i < R.nvars(); ++i) out << (i ? ", " : "") << R.name(i);
  out << "];\n";
  for (const auto& st : s.statements) {
    if (const auto* p = std::get_if<PolyBinding>(&st)) {
      out << "poly " << p->name << " = " << p->value.to_string() << ";\n";
    } else if (const auto* i = std::get_if<IdealBinding>(&st)) {
      out << "ideal " << i->name << " = ";
      if (i->minors)
        out << "minors(" << i->minors->first << ", " << i->minors->second << ")";
      else
        out << join(i->gens);
      out << ";\n";
    } else if (const auto* m = std::get_if<MatrixBinding>(&st)) {
      out << "matrix " << m->name << "[" << m->value.rows() << "][" << m->value.cols() << "] =";
      for (std::size_t r = 0; r < m->value.rows(); ++r) {
        out << (r ? ",\n  " : "\n  ");
        out << join(m->value.row(r));
      }
      out << ";\n";
    } else {
      out << print(std::get<Command>(st)) << ";\n";
    }
  }
  return out.str();
}

}  // namespace symrees::session
