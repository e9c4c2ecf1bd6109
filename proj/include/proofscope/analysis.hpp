#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "proofscope/proof.hpp"

namespace proofscope {

/// Canonical clauses keyed by their printed canonical form.
using ClauseSet = std::map<std::string, Clause>;

struct ProofMetrics {
  std::size_t length = 0;  // all nodes, inputs and the empty clause included
  std::size_t input_count = 0;
  std::size_t derived_count = 0;
  std::size_t max_clause_weight = 0;
  std::size_t depth = 0;  // edges on the longest input-to-root path
};

std::size_t proof_length(const ProofDag& p);
ProofMetrics proof_metrics(const ProofDag& p);

ClauseSet clause_set(const ProofDag& p);
ClauseSet shared_clauses(const ProofDag& p1, const ProofDag& p2);

/// Isomorphism invariant: equal for identical proofs. Combines rule, canonical
/// clause and the multiset of parent signatures bottom-up.
std::uint64_t proof_signature(const ProofDag& p);

/// True iff a bijection between the nodes maps root to root, preserves rules
/// and canonical clauses, and maps each parent multiset onto the
/// corresponding parent multiset.
bool proofs_identical(const ProofDag& p1, const ProofDag& p2);

/// Collection of proofs pairwise non-identical; `insert` rejects duplicates.
class ProofSet {
 public:
  bool insert(ProofDag p);
  bool contains(const ProofDag& p) const;
  const std::vector<ProofDag>& proofs() const { return proofs_; }
  std::vector<ProofDag> release() { return std::move(proofs_); }
  std::size_t size() const { return proofs_.size(); }

 private:
  std::vector<ProofDag> proofs_;
  std::unordered_multimap<std::uint64_t, std::size_t> by_signature_;
};

struct ProofDiff {
  ClauseSet only_first;
  ClauseSet only_second;
  ClauseSet shared;
  bool identical = false;
  /// Not identical, and every distinctive clause of each proof is a premise
  /// of its root inference.
  bool final_step_only = false;
};

ProofDiff proof_diff(const ProofDag& p1, const ProofDag& p2);

struct PairDiff {
  std::size_t first = 0;
  std::size_t second = 0;
  ProofDiff diff;
};

struct AnalysisReport {
  std::vector<ProofMetrics> metrics;
  std::map<std::size_t, std::size_t> spectrum;  // length -> number of proofs
  std::vector<std::vector<bool>> identity;
  std::vector<std::vector<std::size_t>> shared;
  ClauseSet common_core;  // clauses present in every proof
  std::vector<PairDiff> diffs;  // every unordered pair, first < second
};

/// Throws std::invalid_argument when a proof fails check_proof.
AnalysisReport analyze(const std::vector<ProofDag>& proofs);

/// Redirects references from later duplicate clauses to the first occurrence
/// (in topological order), then drops nodes that do not reach the root.
ProofDag structural_tidy(const ProofDag& p);

}  // namespace proofscope
