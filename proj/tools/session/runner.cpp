#include <chrono>
#include <map>
#include <sstream>

#include "session.hpp"
#include "symrees/groebner.hpp"
#include "symrees/special.hpp"
#include "symrees/symbolic.hpp"

namespace symrees::session {

namespace {

using Json = nlohmann::ordered_json;

Json texts(const std::vector<Polynomial>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

Json degrees_of(const std::vector<Polynomial>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p.degree());
  return a;
}

Json rows_of(const FormMatrix& M) {
  Json a = Json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) a.push_back(texts(M.row(i)));
  return a;
}

struct Env {
  RingPtr R;
  std::map<std::string, std::vector<Polynomial>> ideals;
  std::map<std::string, FormMatrix> matrices;

  Ideal ideal(const std::string& name) const { return Ideal(R, ideals.at(name)); }
};

SaturationTarget target_of(const Env& env, const std::optional<SatSpec>& s) {
  if (!s) return SaturationTarget::irrelevant();
  switch (s->kind) {
    case SatSpec::Kind::Irrelevant: return SaturationTarget::irrelevant();
    case SatSpec::Kind::MinimalPrimes: return SaturationTarget::minimal_primes();
    case SatSpec::Kind::Unmixed: return SaturationTarget::unmixed();
    case SatSpec::Kind::Ideal: return SaturationTarget::from_ideal(env.ideal(s->ideal_name));
    case SatSpec::Kind::Element: return SaturationTarget::from_element(*s->element);
  }
  return SaturationTarget::irrelevant();
}

bool user_target(const SaturationTarget& t) {
  return t.kind == SaturationTarget::Kind::Ideal || t.kind == SaturationTarget::Kind::Element;
}

void add_inverse(Record& rec, const ReesPresentation& P, int maxdeg, bool full) {
  const auto res = is_birational(P, maxdeg);
  rec["verdicts"]["birational"] = res.birational;
  rec["degrees"]["forms"] = P.degree;
  if (!res.birational) {
    rec["values"]["reason"] = res.reason;
    return;
  }
  if (full) rec["values"]["inverse"] = texts(res.witness->inverse);
  rec["values"]["factor"] = res.witness->factor.to_string();
  rec["degrees"]["inverse"] = res.witness->inverse_degree;
  rec["degrees"]["factor"] = res.witness->factor.degree();
}

void cmd_inverse(const Env& env, const Command& c, Record& rec) {
  add_inverse(rec, rees_ideal(env.ideal(c.args[0])), static_cast<int>(c.option("maxdeg").value_or(0)), true);
}

void cmd_invfactor(const Env& env, const Command& c, Record& rec) {
  add_inverse(rec, rees_ideal(env.ideal(c.args[0])), static_cast<int>(c.option("maxdeg").value_or(0)), false);
  if (!rec["verdicts"]["birational"].get<bool>()) throw DomainError("the map is not birational");
}

void cmd_rees(const Env& env, const Command& c, Record& rec) {
  const auto P = rees_ideal(env.ideal(c.args[0]));
  rec["values"]["generators"] = texts(P.ideal.generators());
  Json b = Json::array();
  for (const auto& [x, y] : P.bidegrees) b.push_back({x, y});
  rec["degrees"]["bidegrees"] = b;
}

void level_record(Record& rec, SymbolicFiltration& F, int l) {
  const std::string key = std::to_string(l);
  const auto fresh = F.fresh(l);
  rec["values"]["fresh"][key] = texts(fresh);
  rec["degrees"]["fresh"][key] = degrees_of(fresh);
  if (l >= 2) {
    const auto ess = F.essential(l);
    rec["values"]["essential"][key] = texts(ess);
    rec["degrees"]["essential"][key] = degrees_of(ess);
  }
}

void cmd_sympow(const Env& env, const Command& c, Record& rec) {
  const Ideal I = env.ideal(c.args[0]);
  const int l = std::stoi(c.args[1]);
  if (l < 1) throw DomainError("the level must be at least 1");
  const SaturationTarget target = target_of(env, c.sat);
  SymbolicFiltration F(I, target);
  rec["values"]["target"] = target.describe();
  const auto fresh = F.fresh(l);
  rec["values"]["fresh"] = texts(fresh);
  rec["degrees"]["fresh"] = degrees_of(fresh);
  if (l >= 2) {
    const auto ess = F.essential(l);
    rec["values"]["essential"] = texts(ess);
    rec["degrees"]["essential"] = degrees_of(ess);
  }
  rec["degrees"]["minimal_generators"] = degrees_of(minimal_generators(F.symbolic(l)));
  rec["degrees"]["saturation_exponent"] = F.saturation_exponent(l);
  const auto recs = condition_i(F, l);
  const auto& last = recs.back();
  if (last.verdict != ConditionRecord::Verdict::Zero)
    rec["values"]["annihilator"] = texts(minimal_generators(last.annihilator));
  rec["verdicts"]["condition_i"] = to_string(last.verdict);
  rec["verdicts"]["equals_power"] = fresh.empty();
  if (user_target(target)) rec["verdicts"]["target_screen"] = target_preserves_top_components(I, target);
}

void cmd_symrees(const Env& env, const Command& c, Record& rec, const RunOptions& opts) {
  const Ideal I = env.ideal(c.args[0]);
  const int lmax = static_cast<int>(c.option("lmax").value_or(opts.lmax));
  if (lmax < 1) throw DomainError("lmax must be at least 1");
  const auto P = rees_ideal(I);
  add_inverse(rec, P, static_cast<int>(c.option("maxdeg").value_or(0)), true);
  if (!rec["verdicts"]["birational"].get<bool>()) return;
  const auto res = is_birational(P, static_cast<int>(c.option("maxdeg").value_or(0)));
  const Polynomial D = remap_by_name(res.witness->factor, I.ring());
  const int dprime = res.witness->inverse_degree;

  const SaturationTarget target = target_of(env, c.sat);
  SymbolicFiltration F(I, target);
  rec["values"]["target"] = target.describe();
  rec["verdicts"]["depth_positive"] = depth_positive(I);
  if (user_target(target)) rec["verdicts"]["target_screen"] = target_preserves_top_components(I, target);

  const auto conds = condition_i(F, lmax);
  for (int l = 1; l <= lmax; ++l) level_record(rec, F, l);
  for (const auto& r : conds) rec["verdicts"]["condition_i"][std::to_string(r.level)] = to_string(r.verdict);

  const auto report = expected_form_check(F, D, dprime, lmax);
  rec["verdicts"]["factor_in_symbolic"] = report.precondition;
  rec["verdicts"]["factor_in_power"] = F.power(dprime).contains(D);
  if (dprime >= 2) rec["verdicts"]["factor_in_products"] = F.products_below(dprime).contains(D);
  rec["verdicts"]["expected_form"] = Json::object();
  for (const auto& [l, ok] : report.levels) rec["verdicts"]["expected_form"][std::to_string(l)] = ok;
}

void cmd_appendix(const Env& env, const Command& c, Record& rec) {
  const AppendixData A = appendix_construct(env.matrices.at(c.args[0]));
  rec["values"]["base"] = texts(A.base);
  rec["values"]["delta"] = texts({A.delta.begin(), A.delta.end()});
  rec["values"]["q"] = texts({A.q.begin(), A.q.end()});
  rec["values"]["phi_prime"] = rows_of(A.phi_prime);
  rec["values"]["inverse"] = texts(A.inverse);
  if (A.factor) rec["values"]["factor"] = A.factor->to_string();
  rec["degrees"]["inverse"] = A.inverse_degree;
  if (A.factor) rec["degrees"]["factor"] = A.factor->degree();
  rec["degrees"]["codim_B"] = A.codim_B;
  rec["degrees"]["codim_phi_prime"] = A.codim_phi_prime;
  rec["verdicts"]["delta_formulas"] = A.delta_formulas;
  rec["verdicts"]["eq3"] = A.eq3;
  rec["verdicts"]["eq4"] = A.eq4;
  rec["verdicts"]["eq4_opposite"] = A.eq4_opposite;
  rec["verdicts"]["q_nonzero"] = A.q_nonzero;
  rec["verdicts"]["minors_equal_rees"] = A.minors_equal_rees;
  rec["verdicts"]["inverts"] = A.factor.has_value();
  rec["verdicts"]["inverse_gcd_one"] = A.inverse_gcd_one;
}

void cmd_template(const Command& c, Record& rec, const RunOptions& opts) {
  const int n = std::stoi(c.args[0]), r = std::stoi(c.args[1]);
  const auto seed = static_cast<std::uint64_t>(c.option("seed").value_or(static_cast<std::int64_t>(opts.seed)));
  const TemplateInstance T = template_ideal(n, r, seed, static_cast<int>(c.option("retries").value_or(3)));
  rec["values"]["seed"] = T.seed;
  rec["values"]["phi"] = rows_of(T.phi);
  rec["values"]["ideal"] = texts(T.ideal.generators());
  rec["values"]["rejections"] = T.rejections;
  rec["degrees"]["codimension"] = T.codimension;
  rec["degrees"]["multiplicity"] = T.multiplicity.get_str();
  rec["verdicts"]["multiplicity_formula"] = T.multiplicity == template_multiplicity(n, r);
  if (n != 3) return;

  const auto P = rees_ideal(T.ideal);
  const int edeg = implicit_degree(P);
  rec["degrees"]["implicit"] = edeg;
  rec["verdicts"]["implicit_formula"] = edeg == 2 * r + 1;
  rec["verdicts"]["linear_part_primary"] = T.linear_part_primary;
  const SylvesterChain S = sylvester_chain(T);
  Json b = Json::array();
  bool shape = true;
  for (std::size_t i = 0; i < S.bidegrees.size(); ++i) {
    b.push_back({S.bidegrees[i].first, S.bidegrees[i].second});
    const int k = static_cast<int>(i) + 1;
    shape = shape && S.bidegrees[i] == std::pair{r - k, 2 * k + 1};
  }
  rec["degrees"]["chain"] = b;
  rec["verdicts"]["chain_bidegrees"] = shape;
  rec["verdicts"]["chain_in_rees"] = S.in_rees;
  rec["verdicts"]["chain_equals_rees"] = S.equals_rees;

  SymbolicFiltration F(T.ideal);
  const auto fresh = F.fresh(2);
  rec["values"]["fresh"] = texts(fresh);
  rec["degrees"]["fresh"] = degrees_of(fresh);
  const auto inv = linear_inverses(P);
  std::vector<Polynomial> factors;
  for (const auto& w : inv) factors.push_back(remap_by_name(w.factor, T.ideal.ring()));
  rec["values"]["factors"] = texts(factors);
  rec["degrees"]["factors"] = degrees_of(factors);
  rec["verdicts"]["fresh_by_factors"] =
      !factors.empty() && same_ideal(F.symbolic(2), sum(F.power(2), Ideal(T.ideal.ring(), factors)));
  rec["verdicts"]["cyclic"] = fresh.size() == 1;
}

}  // namespace

std::vector<Record> run(const Script& s, const RunOptions& opts) {
  std::vector<Record> out;
  Env env{s.ring.ring, {}, {}};
  for (const auto& st : s.statements) {
    if (const auto* i = std::get_if<IdealBinding>(&st)) {
      env.ideals[i->name] = i->gens;
      continue;
    }
    if (const auto* m = std::get_if<MatrixBinding>(&st)) {
      env.matrices[m->name] = m->value;
      continue;
    }
    const auto* c = std::get_if<Command>(&st);
    if (!c) continue;

    Record rec;
    rec["command"] = print(*c);
    rec["status"] = "ok";
    rec["field"] = env.R->field().name();
    rec["values"] = Json::object();
    rec["degrees"] = Json::object();
    rec["verdicts"] = Json::object();
    const auto start = std::chrono::steady_clock::now();
    try {
      std::optional<ScopedDeadline> guard;
      if (opts.deadline_seconds > 0)
        guard.emplace(std::chrono::duration_cast<std::chrono::steady_clock::duration>(
            std::chrono::duration<double>(opts.deadline_seconds)));
      if (c->verb == "inverse") cmd_inverse(env, *c, rec);
      else if (c->verb == "invfactor") cmd_invfactor(env, *c, rec);
      else if (c->verb == "rees") cmd_rees(env, *c, rec);
      else if (c->verb == "sympow") cmd_sympow(env, *c, rec);
      else if (c->verb == "symrees") cmd_symrees(env, *c, rec, opts);
      else if (c->verb == "appendix") cmd_appendix(env, *c, rec);
      else if (c->verb == "template") cmd_template(*c, rec, opts);
    } catch (const DeadlineExceeded& e) {
      rec["status"] = "timeout";
      rec["error"] = e.what();
    } catch (const std::exception& e) {
      rec["status"] = "failed";
      rec["error"] = e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    rec["elapsed_ms"] = opts.timing ? ms.count() : 0;
    if (rec.contains("error")) {
      // keep error last
      auto e = rec["error"];
      rec.erase("error");
      rec["error"] = e;
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<Record> read_report(std::string_view jsonl) {
  std::vector<Record> out;
  std::istringstream in{std::string(jsonl)};
  std::string line;
  while (std::getline(in, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(Record::parse(line));
  return out;
}

std::string write_report(const std::vector<Record>& records) {
  std::string out;
  for (const auto& r : records) out += r.dump() + "\n";
  return out;
}

std::vector<std::string> diff_reports(const std::vector<Record>& expected, const std::vector<Record>& actual) {
  std::vector<std::string> out;
  if (expected.size() != actual.size())
    out.push_back("expected " + std::to_string(expected.size()) + " records, got " + std::to_string(actual.size()));
  for (std::size_t i = 0; i < std::min(expected.size(), actual.size()); ++i) {
    Record a = expected[i], b = actual[i];
    a.erase("elapsed_ms");
    b.erase("elapsed_ms");
    if (a == b) continue;
    for (const auto& [k, v] : a.items())
      if (!b.contains(k) || b[k] != v)
        out.push_back("record " + std::to_string(i + 1) + " (" + expected[i].value("command", "") + "): field " + k +
                      " expected " + v.dump() + ", got " + (b.contains(k) ? b[k].dump() : "nothing"));
    for (const auto& [k, v] : b.items())
      if (!a.contains(k))
        out.push_back("record " + std::to_string(i + 1) + ": unexpected field " + k + " = " + v.dump());
  }
  return out;
}

}  // namespace symrees::session
