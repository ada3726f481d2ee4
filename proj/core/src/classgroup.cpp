#include "cgs/classgroup.hpp"

#include <cmath>

#include "cgs/error.hpp"

namespace cgs {

std::vector<std::size_t> pruned_columns(const FactorBase& fb, unsigned t) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < fb.size(); ++i)
    if (fb.ideals[i].f > t) out.push_back(i);
  return out;
}

namespace {

std::vector<std::size_t> kept_columns(const FactorBase& fb, unsigned t) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < fb.size(); ++i)
    if (fb.ideals[i].f <= t) keep.push_back(i);
  return keep;
}

Vector project(const Relation& r, const std::vector<std::size_t>& keep) {
  Vector v(keep.size());
  for (std::size_t j = 0; j < keep.size(); ++j) v[j] = r.e[keep[j]];
  return v;
}

}  // namespace

Matrix relation_matrix(const std::vector<Relation>& rels, const FactorBase& fb, unsigned t) {
  const auto keep = kept_columns(fb, t);
  Matrix M;
  M.reserve(rels.size());
  for (const Relation& r : rels) M.push_back(project(r, keep));
  return M;
}

std::vector<Relation> rational_prime_relations(const NumberField& field, const FactorBase& fb) {
  std::vector<Relation> out;
  for (const auto& [p, idx] : fb.above) {
    unsigned ef = 0;
    Relation r;
    r.e.assign(fb.size(), 0);
    for (std::size_t i : idx) {
      ef += fb.ideals[i].e * fb.ideals[i].f;
      r.e[i] = static_cast<int>(fb.ideals[i].e);
    }
    if (ef != static_cast<unsigned>(field.degree())) continue;
    r.x = field.zero();
    r.x.coeffs[0] = static_cast<unsigned long>(p);
    r.norm = ipow(Integer(static_cast<unsigned long>(p)), static_cast<unsigned long>(field.degree()));
    out.push_back(std::move(r));
  }
  return out;
}

ClassGroupResult class_group(const std::vector<Relation>& rels, const FactorBase& fb, unsigned t) {
  const auto keep = kept_columns(fb, t);
  ClassGroupResult res;
  res.pruned_columns = pruned_columns(fb, t);
  LatticeEchelon ech(keep.size());
  for (const Relation& r : rels) ech.insert(project(r, keep));
  if (!ech.full_rank()) {
    std::string cols;
    for (std::size_t c : ech.missing_pivots()) cols += (cols.empty() ? "" : ",") + std::to_string(keep[c]);
    throw Error(ErrorCode::RankDeficient, "no pivot in factor-base columns " + cols);
  }
  if (keep.empty()) {
    res.h = 1;
    return res;
  }
  const SmithForm s = snf(ech.hnf());
  res.invariants = s.nontrivial();
  res.h = s.product();
  return res;
}

PipelineRun run_classgroup(const NumberField& field, const FactorBase& fb, const PipelineConfig& cfg,
                           std::optional<RelationSet> resume,
                           const std::function<void(const RelationSet&)>& checkpoint) {
  PipelineRun run;
  const std::size_t N = fb.size();
  if (N == 0) throw Error(ErrorCode::BoundTooSmall, "factor base is empty");
  if (resume) {
    if (resume->fb_hash != fb.hash())
      throw Error(ErrorCode::HashMismatch, "relation database was built over a different factor base");
    run.rels = std::move(*resume);
  } else {
    run.rels.region.t = cfg.t;
    run.rels.region.S = cfg.S;
    run.rels.fb_hash = fb.hash();
  }
  RelationSet& rels = run.rels;
  const unsigned t = rels.region.t;
  const auto keep = kept_columns(fb, t);
  if (keep.empty()) {
    // Every ideal is pruned: no candidate can produce a relation and the
    // lattice over the kept columns is the zero lattice.
    run.result.h = 1;
    run.result.pruned_columns = pruned_columns(fb, t);
    run.result.det_history = {Integer(1)};
    if (checkpoint) checkpoint(rels);
    return run;
  }
  const std::size_t batch = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(N))));
  if (rels.target == 0) rels.target = cfg.target ? cfg.target : target_relation_count(N);
  const std::uint64_t budget = cfg.budget ? rels.counters.tested + cfg.budget : 0;

  // The echelon is rebuilt from the absorbed prefix; the history is persisted.
  LatticeEchelon ech(keep.size());
  std::size_t absorbed = 0;
  auto absorb = [&](std::size_t upto) {
    for (; absorbed < upto && absorbed < rels.relations.size(); ++absorbed)
      ech.insert(project(rels.relations[absorbed], keep));
    rels.absorbed = absorbed;
  };
  const std::vector<Relation> fixed = rational_prime_relations(field, fb);
  for (const Relation& r : fixed) ech.insert(project(r, keep));
  absorb(rels.absorbed);
  std::vector<Integer>& history = rels.det_history;
  auto record = [&] { history.push_back(ech.full_rank() ? ech.pivot_product() : Integer(0)); };
  auto stable = [&] {
    if (history.size() < cfg.stable_batches + 1) return false;
    const Integer& last = history.back();
    if (last == 0) return false;
    for (std::size_t i = history.size() - cfg.stable_batches - 1; i < history.size(); ++i)
      if (history[i] != last) return false;
    return true;
  };
  auto notify = [&] {
    if (checkpoint) checkpoint(rels);
  };

  bool done = stable();
  while (!done) {
    extend_relations(field, fb, rels, rels.target, budget, cfg.threads);
    if (rels.budget_exhausted) {
      run.status = PipelineRun::Status::BudgetExhausted;
      notify();
      return run;
    }
    if (rels.relations.size() < rels.target) {
      // The box ran dry: the relations found so far form a checkpoint too.
      absorb(rels.relations.size());
      record();
      if (stable()) break;
      if (cfg.grow_S && rels.region.S <= cfg.S_max / 2) {
        rels.region.inner = rels.region.S;
        rels.region.S *= 2;
        rels.next_index = 0;
        rels.region_exhausted = false;
        notify();
        continue;
      }
      notify();
      break;
    }
    absorb(rels.target);
    record();
    if (stable()) {
      notify();
      break;
    }
    rels.target += batch;
    notify();
  }

  std::vector<Integer> saved = history;
  try {
    std::vector<Relation> all = fixed;
    all.insert(all.end(), rels.relations.begin(), rels.relations.end());
    run.result = class_group(all, fb, t);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::RankDeficient) throw;
    run.status = PipelineRun::Status::RankDeficient;
    run.result.pruned_columns = pruned_columns(fb, t);
    for (std::size_t c : ech.missing_pivots()) run.missing_columns.push_back(keep[c]);
  }
  run.result.det_history = std::move(saved);
  return run;
}

}  // namespace cgs
