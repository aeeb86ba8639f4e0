#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "session.hpp"

namespace ss = symrees::session;

namespace {

std::optional<std::string> slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool all_ok(const std::vector<ss::Record>& records) {
  for (const auto& r : records)
    if (r.value("status", "") != "ok") return false;
  return true;
}

// Parses or reports "file:line:col: message" on stderr.
std::optional<ss::Script> load(const std::string& label, const std::string& text) {
  try {
    return ss::parse(text);
  } catch (const symrees::ParseError& e) {
    std::cerr << label << ":" << e.line() << ":" << e.column() << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inverses, inversion factors and symbolic powers of Cremona maps"};
  app.require_subcommand(1);

  ss::RunOptions opts;
  std::string script_path, out_path;
  bool no_timing = false;

  auto* run = app.add_subcommand("run", "Run a session script and write one JSON record per command");
  run->add_option("script", script_path, "Session script")->required()->check(CLI::ExistingFile);
  run->add_option("--lmax", opts.lmax, "Default top level for symrees")->check(CLI::PositiveNumber);
  run->add_option("--deadline", opts.deadline_seconds, "Per-command deadline in seconds (0 disables)");
  run->add_option("--seed", opts.seed, "Seed for template commands without seed=");
  run->add_option("--out", out_path, "Report file (default: stdout)");
  run->add_flag("--no-timing", no_timing, "Write elapsed_ms as 0 for byte-identical reports");

  auto* print = app.add_subcommand("print", "Print a session script in canonical form");
  print->add_option("script", script_path, "Session script")->required()->check(CLI::ExistingFile);

  std::string only, update_dir;
  bool list = false;
  auto* fixtures = app.add_subcommand("fixtures", "Run the embedded fixture corpus against the stored reports");
  fixtures->add_option("--only", only, "Run a single corpus entry");
  fixtures->add_flag("--list", list, "List the corpus entries");
  fixtures->add_option("--update", update_dir, "Write fresh reports into this directory instead of comparing");
  fixtures->add_option("--deadline", opts.deadline_seconds, "Per-command deadline in seconds (0 disables)");

  CLI11_PARSE(app, argc, argv);

  if (*run || *print) {
    const auto text = slurp(script_path);
    if (!text) {
      std::cerr << script_path << ": cannot read\n";
      return 2;
    }
    const auto script = load(script_path, *text);
    if (!script) return 2;
    if (*print) {
      std::cout << ss::print(*script);
      return 0;
    }
    opts.timing = !no_timing;
    const auto records = ss::run(*script, opts);
    const std::string report = ss::write_report(records);
    if (out_path.empty()) {
      std::cout << report;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        std::cerr << out_path << ": cannot write\n";
        return 2;
      }
      out << report;
    }
    return all_ok(records) ? 0 : 1;
  }

  opts.timing = false;
  bool pass = true;
  std::size_t ran = 0;
  for (const auto& entry : ss::corpus()) {
    if (!only.empty() && entry.name != only) continue;
    ++ran;
    if (list) {
      std::cout << entry.name << "\n";
      continue;
    }
    const auto script = load(entry.name, entry.script);
    if (!script) {
      pass = false;
      continue;
    }
    const auto records = ss::run(*script, opts);
    if (!update_dir.empty()) {
      std::ofstream(update_dir + "/" + entry.name + ".jsonl", std::ios::binary) << ss::write_report(records);
      std::cout << "wrote " << entry.name << "\n";
      continue;
    }
    auto diffs = ss::diff_reports(ss::read_report(entry.expected), records);
    if (!all_ok(records)) diffs.insert(diffs.begin(), "a command did not finish with status ok");
    std::cout << (diffs.empty() ? "PASS " : "FAIL ") << entry.name << "\n";
    for (const auto& d : diffs) std::cout << "  " << d << "\n";
    pass = pass && diffs.empty();
  }
  if (ran == 0) {
    std::cerr << "no corpus entry named '" << only << "'\n";
    return 2;
  }
  return pass ? 0 : 1;
}
