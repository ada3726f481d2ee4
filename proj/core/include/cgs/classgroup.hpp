#pragma once
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cgs/factorbase.hpp"
#include "cgs/linalg.hpp"
#include "cgs/sieve.hpp"

namespace cgs {

struct ClassGroupResult {
  Integer h = 0;
  std::vector<Integer> invariants;  // d_1 | d_2 | ..., each > 1
  bool certified = false;
  std::vector<std::size_t> pruned_columns;
  std::vector<Integer> det_history;
};

/// Ideals of residue degree f > t: they cannot divide a primitive candidate
/// of degree <= t and are left out of the rank accounting.
std::vector<std::size_t> pruned_columns(const FactorBase& fb, unsigned t);

/// Relation rows restricted to the non-pruned columns.
Matrix relation_matrix(const std::vector<Relation>& rels, const FactorBase& fb, unsigned t);

/// <p> = prod q^e for every rational prime p whose prime ideals all lie in
/// the base. The sieve never produces these since constants are skipped.
std::vector<Relation> rational_prime_relations(const NumberField& field, const FactorBase& fb);

/// HNF/SNF of the relation lattice. Throws RankDeficient naming the missing
/// columns when some non-pruned column never receives a pivot.
ClassGroupResult class_group(const std::vector<Relation>& rels, const FactorBase& fb, unsigned t);

struct PipelineConfig {
  std::uint64_t bound = 30;
  unsigned t = 1;
  long S = 8;
  std::size_t target = 0;       // 0: target_relation_count(|FB|)
  std::uint64_t budget = 0;     // candidates per invocation, 0 = unlimited
  unsigned threads = 1;
  bool grow_S = true;           // double S when the box runs dry
  long S_max = 1L << 16;
  std::size_t stable_batches = 3;
};

struct PipelineRun {
  enum class Status { Ok, BudgetExhausted, RankDeficient };
  Status status = Status::Ok;
  RelationSet rels;
  ClassGroupResult result;
  std::vector<std::size_t> missing_columns;
};

/// Factor base -> sieve in batches -> determinant stabilization -> SNF.
/// `resume` continues a persisted relation set (same factor base).
/// `checkpoint` is called with the relation set after every batch and on
/// every early stop.
PipelineRun run_classgroup(const NumberField& field, const FactorBase& fb, const PipelineConfig& cfg,
                           std::optional<RelationSet> resume = std::nullopt,
                           const std::function<void(const RelationSet&)>& checkpoint = {});

}  // namespace cgs
