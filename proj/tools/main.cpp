// cgs: class groups, sieve planning and principal ideal testing from the
// command line.
#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "cgs/classgroup.hpp"
#include "cgs/error.hpp"
#include "cgs/io.hpp"
#include "cgs/params.hpp"
#include "cgs/pip.hpp"
#include "cgs/qforms.hpp"

#ifndef CGS_VERSION
#define CGS_VERSION "0.0.0"
#endif

namespace {

using cgs::io::Json;

enum ExitCode { kOk = 0, kFailure = 1, kInput = 2, kNotPrincipal = 3, kBudget = 4, kRankDeficient = 5 };

enum class Level { Off, Error, Warn, Info, Debug };

Level log_level() {
  const char* env = std::getenv("CGS_LOG");
  if (!env) return Level::Warn;
  const std::string v = env;
  if (v == "off") return Level::Off;
  if (v == "error") return Level::Error;
  if (v == "info") return Level::Info;
  if (v == "debug") return Level::Debug;
  return Level::Warn;
}

void log(Level lvl, const std::string& msg) {
  static const Level current = log_level();
  if (lvl == Level::Off || lvl > current) return;
  static const char* names[] = {"", "error", "warn", "info", "debug"};
  std::cerr << "[cgs " << names[static_cast<int>(lvl)] << "] " << msg << '\n';
}

int exit_code_for(cgs::ErrorCode c) {
  using cgs::ErrorCode;
  switch (c) {
    case ErrorCode::NotPrincipalInLattice: return kNotPrincipal;
    case ErrorCode::BudgetExhausted:
    case ErrorCode::DescentBudgetExhausted: return kBudget;
    case ErrorCode::RankDeficient: return kRankDeficient;
    case ErrorCode::ReductionFailed:
    case ErrorCode::ScheduleInfeasible: return kFailure;
    default: return kInput;
  }
}

struct Options {
  std::string field_path;
  std::optional<std::uint64_t> bound;
  std::optional<unsigned> deg;
  std::optional<long> coeff;
  std::size_t target = 0;
  std::uint64_t seed = 1;
  std::uint64_t budget = 0;
  std::string resume;
  unsigned threads = 1;
  std::string out;
  bool json = false;

  // Command-specific.
  std::string db;
  std::string ideal;
  std::string relations;
  std::string result;
  std::optional<long> expected_h;
  std::optional<double> alpha, gamma, gamma_f, n0, d0;
  double step = 0.01;
  double gamma_max = 1.2;
};

void add_common(CLI::App* cmd, Options& o, bool needs_field) {
  auto* f = cmd->add_option("--field", o.field_path, "Field file ({\"T\": [c0, ..., 1]})")->check(CLI::ExistingFile);
  if (needs_field) f->required();
  cmd->add_option("--bound", o.bound, "Factor base bound B")->check(CLI::Range(2ULL, 1ULL << 40));
  cmd->add_option("--deg", o.deg, "Candidate degree t")->check(CLI::Range(1u, 64u));
  cmd->add_option("--coeff", o.coeff, "Candidate coefficient bound S")->check(CLI::Range(1L, 1L << 30));
  cmd->add_option("--target", o.target, "Initial relation target (0 = automatic)");
  cmd->add_option("--seed", o.seed, "Random seed");
  cmd->add_option("--budget", o.budget, "Work budget for this invocation (0 = unlimited)");
  cmd->add_option("--resume", o.resume, "Relation database to resume from")->check(CLI::ExistingFile);
  cmd->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  cmd->add_option("--out", o.out, "Write the JSON result to this file");
  cmd->add_flag("--json", o.json, "Print JSON on stdout");
}

void emit(const Options& o, const Json& j, const std::string& human) {
  if (!o.out.empty()) cgs::io::write_file(o.out, j.dump(2) + "\n");
  if (o.json) std::cout << j.dump(2) << '\n';
  else std::cout << human;
}

cgs::NumberField load_field(const Options& o) { return cgs::io::parse_field(cgs::io::read_file(o.field_path)); }

Json provenance(const Options& o, const cgs::FactorBase* fb) {
  Json j{{"tool", "cgs"}, {"version", CGS_VERSION}, {"seed", o.seed}};
  if (fb) j["fb_hash"] = fb->hash();
  return j;
}

// ---------------------------------------------------------------- plan

int cmd_plan(const Options& o) {
  std::optional<cgs::ClassDescriptor> hint;
  if (o.alpha || o.gamma) {
    if (!o.alpha || !o.gamma) throw cgs::Error(cgs::ErrorCode::InvalidArgument, "--alpha and --gamma go together");
    cgs::ClassDescriptor d;
    d.alpha = *o.alpha;
    d.gamma = *o.gamma;
    if (o.n0) d.n0 = *o.n0;
    if (o.d0) d.d0 = *o.d0;
    hint = d;
  }
  if (o.field_path.empty() && !hint)
    throw cgs::Error(cgs::ErrorCode::InvalidArgument, "plan needs --field or --alpha/--gamma");

  Json j = provenance(o, nullptr);
  std::optional<cgs::NumberField> K;
  cgs::ClassDescriptor d;
  if (!o.field_path.empty()) {
    K = load_field(o);
    d = cgs::classify(*K, hint);
    j["field"] = cgs::io::field_json(*K);
  } else {
    d = *hint;
  }
  j["descriptor"] = cgs::io::descriptor_json(d);
  const cgs::Regime regime = cgs::regime_of(d.alpha, d.gamma);
  j["regime"] = cgs::to_string(regime);

  const cgs::Integer disc = K ? K->abs_disc() : cgs::Integer(1) << 256;
  const int n = K ? K->degree() : 64;
  const cgs::RegimeParams rp = cgs::regime_params(d, disc, n);
  j["constants"] = Json{{"c_b", rp.c_b}, {"c_s", rp.c_s}, {"c_t", rp.c_t}};
  j["exponent"] = Json::array({rp.exponent_a, rp.exponent_c});

  const double gf = o.gamma_f.value_or(d.gamma);
  const cgs::StrategyDecision s = cgs::strategy(d.alpha, d.gamma, gf);
  j["strategy"] = Json{{"action", s.label()}, {"exponent", s.exponent}, {"row", s.row}, {"gamma_F", gf}};
  const double gf_opt = std::max(0.0, 1 - d.alpha);
  if (gf_opt <= d.gamma) {
    const cgs::StrategyDecision so = cgs::strategy(d.alpha, d.gamma, gf_opt);
    j["strategy_optimistic"] =
        Json{{"action", so.label()}, {"exponent", so.exponent}, {"row", so.row}, {"gamma_F", gf_opt}};
    if (so.action != s.action)
      log(Level::Warn, "polynomial reduction is out of scope; the optimistic row assumes gamma_F = 1 - alpha");
  }

  std::ostringstream human;
  human << "regime:   " << cgs::to_string(regime) << "\n"
        << "alpha:    " << d.alpha << "  gamma: " << d.gamma << "\n"
        << "c_b, c_s, c_t: " << rp.c_b << ", " << rp.c_s << ", " << rp.c_t << "\n"
        << "runtime:  L(" << rp.exponent_a << ", " << rp.exponent_c << ")\n"
        << "strategy: " << s.label() << " exponent " << s.exponent << "\n";
  if (K) {
    const cgs::DeskPlan plan = cgs::desk_scale_plan(*K, d);
    const std::uint64_t B = o.bound.value_or(plan.B);
    const unsigned t = o.deg.value_or(plan.t);
    const long S = o.coeff.value_or(plan.S);
    j["concrete"] = Json{{"B", B}, {"t", t}, {"S", S}, {"adaptive", plan.adaptive}};
    j["desk_scale"] = d.desk_scale;
    human << "concrete: B = " << B << ", t = " << t << ", S = " << S << (plan.adaptive ? " (adaptive)" : "") << "\n"
          << "desk scale: " << (d.desk_scale ? "yes" : "no") << "\n";
  } else {
    j["concrete"] = Json{{"B", cgs::io::integer_json(rp.B)}, {"t", rp.t}, {"S", cgs::io::integer_json(rp.S)}};
    j["desk_scale"] = false;
  }
  emit(o, j, human.str());
  return kOk;
}

// ---------------------------------------------------------- classgroup

struct Built {
  cgs::NumberField K;
  cgs::FactorBase fb;
  cgs::PipelineConfig cfg;
};

Built prepare(const Options& o) {
  cgs::NumberField K = load_field(o);
  const cgs::DeskPlan plan = cgs::desk_scale_plan(K);
  cgs::PipelineConfig cfg;
  cfg.bound = o.bound.value_or(plan.B);
  cfg.t = o.deg.value_or(plan.t);
  cfg.S = o.coeff.value_or(plan.S);
  cfg.target = o.target;
  cfg.budget = o.budget;
  cfg.threads = o.threads;
  if (!o.resume.empty() && !o.bound) {
    // The database header carries the bound it was built with.
    const std::string text = cgs::io::read_file(o.resume);
    const Json header = Json::parse(text.substr(0, text.find('\n')));
    if (header.contains("B")) cfg.bound = header["B"].get<std::uint64_t>();
  }
  log(Level::Info, "B = " + std::to_string(cfg.bound) + ", t = " + std::to_string(cfg.t) +
                       ", S = " + std::to_string(cfg.S));
  cgs::FactorBase fb = cgs::build_factor_base(K, cfg.bound);
  log(Level::Info, "factor base: " + std::to_string(fb.size()) + " ideals");
  return {std::move(K), std::move(fb), cfg};
}

std::optional<cgs::RelationSet> load_resume(const Options& o, const Built& b) {
  if (o.resume.empty()) return std::nullopt;
  return cgs::io::parse_relation_db(cgs::io::read_file(o.resume), b.K, b.fb);
}

/// Oracle class number when the field is imaginary quadratic.
std::optional<cgs::Integer> oracle_h(const cgs::NumberField& K) {
  if (K.degree() != 2 || K.disc_T() >= 0 || K.abs_disc() > 1000000) return std::nullopt;
  return cgs::Integer(cgs::class_number_forms(K.disc_T().get_si()));
}

int cmd_classgroup(const Options& o) {
  Built b = prepare(o);
  const std::string db = !o.db.empty() ? o.db : !o.resume.empty() ? o.resume : !o.out.empty() ? o.out + ".rels" : "";
  auto checkpoint = [&](const cgs::RelationSet& rels) {
    if (db.empty()) return;
    cgs::io::write_file(db, cgs::io::relation_db(b.K, b.fb, rels));
    log(Level::Debug, "checkpoint: " + std::to_string(rels.relations.size()) + " relations");
  };
  cgs::PipelineRun run = cgs::run_classgroup(b.K, b.fb, b.cfg, load_resume(o, b), checkpoint);

  Json j = provenance(o, &b.fb);
  j["field"] = cgs::io::field_json(b.K);
  j["config"] = Json{{"B", b.cfg.bound}, {"t", b.cfg.t}, {"S", b.cfg.S}, {"target", b.cfg.target}};
  j["relations"] = run.rels.relations.size();

  if (run.status == cgs::PipelineRun::Status::BudgetExhausted) {
    j["status"] = "budget_exhausted";
    j["tested"] = run.rels.counters.tested;
    emit(o, j, "budget exhausted after " + std::to_string(run.rels.counters.tested) +
                   " candidates; resume with --resume " + (db.empty() ? "<db>" : db) + "\n");
    return kBudget;
  }
  if (run.status == cgs::PipelineRun::Status::RankDeficient) {
    j["status"] = "rank_deficient";
    Json missing = Json::array();
    for (std::size_t c : run.missing_columns) missing.push_back(c);
    j["missing_columns"] = missing;
    std::ostringstream human;
    human << "relation matrix is rank deficient; columns without a pivot:";
    for (std::size_t c : run.missing_columns) human << ' ' << c;
    human << "\n";
    emit(o, j, human.str());
    return kRankDeficient;
  }

  if (auto h = oracle_h(b.K)) run.result.certified = *h == run.result.h;
  j["status"] = "ok";
  const Json cg = cgs::io::class_group_json(run.result);
  for (auto& [k, v] : cg.items()) j[k] = v;

  std::ostringstream human;
  human << "h = " << run.result.h.get_str() << "\ninvariants: [";
  for (std::size_t i = 0; i < run.result.invariants.size(); ++i)
    human << (i ? ", " : "") << run.result.invariants[i].get_str();
  human << "]\ncertified: " << (run.result.certified ? "yes" : "no") << "\n";
  emit(o, j, human.str());
  return kOk;
}

// ----------------------------------------------------------------- pip

int cmd_pip(const Options& o) {
  Built b = prepare(o);
  if (o.ideal.empty()) throw cgs::Error(cgs::ErrorCode::InvalidArgument, "pip needs --ideal FILE");
  const cgs::IdealHNF a = cgs::io::parse_ideal(cgs::io::read_file(o.ideal), b.K);

  std::vector<cgs::Relation> rels;
  const std::string db = !o.relations.empty() ? o.relations : o.resume;
  if (!db.empty()) {
    rels = cgs::io::parse_relation_db(cgs::io::read_file(db), b.K, b.fb).relations;
  } else {
    b.cfg.budget = 0;
    cgs::PipelineRun run = cgs::run_classgroup(b.K, b.fb, b.cfg);
    rels = std::move(run.rels.relations);
  }
  log(Level::Info, std::to_string(rels.size()) + " relations");

  cgs::DescentOptions dopt;
  dopt.seed = o.seed;
  dopt.threads = o.threads;
  if (o.budget) dopt.max_attempts = static_cast<unsigned>(std::min<std::uint64_t>(o.budget, 1u << 30));
  const cgs::PipOutcome res = cgs::solve_pip(b.K, b.fb, rels, a, dopt);

  Json j = provenance(o, &b.fb);
  j["field"] = cgs::io::field_json(b.K);
  j["ideal_norm"] = cgs::io::integer_json(a.norm());
  j["principal"] = res.principal;
  j["descent_attempts"] = res.descent.attempts;
  if (!res.principal || !res.witness.verified) {
    j["principal"] = false;
    emit(o, j, "not principal in the relation lattice\n");
    return kNotPrincipal;
  }
  const Json wj = cgs::io::witness_json(res.witness);
  for (auto& [k, v] : wj.items()) j[k] = v;
  std::ostringstream human;
  human << "principal: verified witness with " << res.witness.numerator.size() << " numerator and "
        << res.witness.denominator.size() << " denominator factors\n";
  if (res.witness.value) {
    human << "generator:";
    for (const auto& c : res.witness.value->coeffs) human << ' ' << c.get_str();
    human << "\n";
  }
  emit(o, j, human.str());
  return kOk;
}

// -------------------------------------------------------------- verify

int cmd_verify(const Options& o) {
  cgs::NumberField K = load_field(o);
  cgs::Integer h;
  if (!o.result.empty()) {
    const Json r = Json::parse(cgs::io::read_file(o.result));
    if (!r.contains("h")) throw cgs::Error(cgs::ErrorCode::ParseError, "result file has no \"h\"");
    h = cgs::io::integer_from_json(r["h"]);
  } else {
    Built b = prepare(o);
    cgs::PipelineRun run = cgs::run_classgroup(b.K, b.fb, b.cfg, load_resume(o, b));
    if (run.status == cgs::PipelineRun::Status::BudgetExhausted)
      throw cgs::Error(cgs::ErrorCode::BudgetExhausted, "budget exhausted before a class number was found");
    if (run.status == cgs::PipelineRun::Status::RankDeficient)
      throw cgs::Error(cgs::ErrorCode::RankDeficient, "relation matrix is rank deficient");
    h = run.result.h;
  }
  cgs::Integer expected;
  std::string source;
  if (o.expected_h) {
    expected = *o.expected_h;
    source = "expected";
  } else if (auto oh = oracle_h(K)) {
    expected = *oh;
    source = "reduced_forms";
  } else {
    throw cgs::Error(cgs::ErrorCode::OracleDomain, "no oracle for this field; pass --expected-h");
  }
  const bool ok = h == expected;
  Json j = provenance(o, nullptr);
  j["field"] = cgs::io::field_json(K);
  j["discriminant"] = cgs::io::integer_json(K.disc_T());
  j["h"] = cgs::io::integer_json(h);
  j["oracle"] = source;
  j["oracle_h"] = cgs::io::integer_json(expected);
  j["certified"] = ok;
  emit(o, j,
       "h = " + h.get_str() + ", " + source + " h = " + expected.get_str() + (ok ? ": certified\n" : ": MISMATCH\n"));
  return ok ? kOk : kFailure;
}

// ------------------------------------------------------------- regions

int cmd_regions(const Options& o) {
  const auto pts = cgs::strategy_regions(o.step, o.gamma_max);
  std::ostringstream csv;
  csv << "alpha,gamma_0,valid,exponent,strategy\n";
  Json arr = Json::array();
  for (const auto& p : pts) {
    csv << p.alpha << ',' << p.gamma_0 << ',' << (p.valid ? 1 : 0) << ',';
    if (p.valid) csv << p.decision.exponent << ',' << p.decision.label();
    else csv << ',';
    csv << '\n';
    Json row{{"alpha", p.alpha}, {"gamma_0", p.gamma_0}, {"valid", p.valid}};
    if (p.valid) {
      row["exponent"] = p.decision.exponent;
      row["strategy"] = p.decision.label();
    }
    arr.push_back(row);
  }
  if (o.json) {
    Json j = provenance(o, nullptr);
    j["step"] = o.step;
    j["points"] = arr;
    if (!o.out.empty()) cgs::io::write_file(o.out, j.dump() + "\n");
    std::cout << j.dump() << '\n';
  } else {
    if (!o.out.empty()) cgs::io::write_file(o.out, csv.str());
    else std::cout << csv.str();
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Class groups by sieving, sieve parameter planning and principal ideal testing"};
  app.set_version_flag("--version", CGS_VERSION);
  app.require_subcommand(1);
  Options o;

  auto* plan = app.add_subcommand("plan", "Classify a field and print sieve parameters and the strategy");
  add_common(plan, o, false);
  plan->add_option("--alpha", o.alpha, "Degree exponent alpha")->check(CLI::Range(0.0, 1.0));
  plan->add_option("--gamma", o.gamma, "Height exponent gamma_0")->check(CLI::Range(0.0, 2.0));
  plan->add_option("--gamma-f", o.gamma_f, "Height exponent after polynomial reduction");
  plan->add_option("--n0", o.n0, "Degree window constant");
  plan->add_option("--d0", o.d0, "Height constant");

  auto* cg = app.add_subcommand("classgroup", "Compute the class group by relation sieving");
  add_common(cg, o, true);
  cg->add_option("--db", o.db, "Relation database to write (default: the resume file or OUT.rels)");

  auto* pip = app.add_subcommand("pip", "Decide principality and find a generator");
  add_common(pip, o, true);
  pip->add_option("--ideal", o.ideal, "Ideal file ({\"generators\": ...} or {\"hnf\": ...})")
      ->required()
      ->check(CLI::ExistingFile);
  pip->add_option("--relations", o.relations, "Relation database from classgroup")->check(CLI::ExistingFile);

  auto* verify = app.add_subcommand("verify", "Check a class number against the reduced-forms oracle");
  add_common(verify, o, true);
  verify->add_option("--result", o.result, "Class group result JSON")->check(CLI::ExistingFile);
  verify->add_option("--expected-h", o.expected_h, "Expected class number outside the oracle domain");

  auto* regions = app.add_subcommand("regions", "Dump the strategy grid as CSV");
  add_common(regions, o, false);
  regions->add_option("--step", o.step, "Grid step in (0, 0.1]");
  regions->add_option("--gamma-max", o.gamma_max, "Largest gamma_0 on the grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (*plan) return cmd_plan(o);
    if (*cg) return cmd_classgroup(o);
    if (*pip) return cmd_pip(o);
    if (*verify) return cmd_verify(o);
    if (*regions) return cmd_regions(o);
  } catch (const cgs::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kInput;
}
