#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "symrees/form_matrix.hpp"
#include "symrees/polynomial.hpp"

namespace symrees::session {

using Record = nlohmann::ordered_json;

struct Position {
  std::size_t line = 1, column = 1;
};

struct RingDecl {
  std::string name;
  RingPtr ring;
};

struct PolyBinding {
  std::string name;
  Polynomial value;
};

struct IdealBinding {
  std::string name;
  std::vector<Polynomial> gens;
  /// Set for `minors(k, M)`; gens then holds the minors.
  std::optional<std::pair<std::size_t, std::string>> minors;
};

struct MatrixBinding {
  std::string name;
  FormMatrix value;
};

/// What `sat=` resolved to at parse time.
struct SatSpec {
  enum class Kind { Irrelevant, MinimalPrimes, Unmixed, Ideal, Element };
  Kind kind = Kind::Irrelevant;
  /// Bound name for Ideal, or the element itself.
  std::string ideal_name;
  std::optional<Polynomial> element;
};

struct Command {
  std::string verb;
  std::vector<std::string> args;
  std::optional<SatSpec> sat;
  /// Integer options (lmax, maxdeg, seed, retries) in source order.
  std::vector<std::pair<std::string, std::int64_t>> options;
  Position pos;

  std::optional<std::int64_t> option(std::string_view key) const;
};

using Statement = std::variant<PolyBinding, IdealBinding, MatrixBinding, Command>;

struct Script {
  RingDecl ring;
  std::vector<Statement> statements;

  std::size_t command_count() const;
};

/// Grammar, one statement per ';', '#' starts a comment:
///   ring R = QQ[x0..x4];   ring R = Fp(31991)[x, y, z];
///   poly f = <expr>;
///   ideal I = f1, f2, ...;   ideal J = minors(k, M);
///   matrix M[r][c] = <r*c entries, row by row>;
///   inverse I [maxdeg=N];   invfactor I [maxdeg=N];   rees I;
///   sympow I l [sat=m|min|unm|<ideal>|<poly>|(<expr>)];
///   symrees I [lmax=N] [sat=...];
///   appendix M;   template n r [seed=N] [retries=N];
/// Throws ParseError with the 1-based line and column of the offending token.
Script parse(std::string_view text);

/// Canonical text; parse(print(s)) prints identically.
std::string print(const Script& s);
std::string print(const Command& c);

struct RunOptions {
  int lmax = 4;
  double deadline_seconds = 600;
  /// Seed for `template` commands without seed=.
  std::uint64_t seed = 1;
  /// When false, elapsed_ms is written as 0 so reports are byte-identical.
  bool timing = true;
};

/// One record per command with fields command, status (ok, failed or
/// timeout), field, values, degrees, verdicts, elapsed_ms and, for failures,
/// error. A failing command never stops the run.
std::vector<Record> run(const Script& s, const RunOptions& opts);

/// Records whose fields other than elapsed_ms differ, as human-readable lines.
std::vector<std::string> diff_reports(const std::vector<Record>& expected, const std::vector<Record>& actual);

std::vector<Record> read_report(std::string_view jsonl);
std::string write_report(const std::vector<Record>& records);

struct CorpusEntry {
  std::string name;
  std::string script;
  std::string expected;
};

/// The fixture scripts with their stored reports (generated at build time).
const std::vector<CorpusEntry>& corpus();

}  // namespace symrees::session
