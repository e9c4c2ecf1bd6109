#pragma once

#include <optional>
#include <string>
#include <vector>

#include "proofscope/clausify.hpp"
#include "proofscope/proof.hpp"

namespace proofscope {

enum class SosPolicy { negated_conjecture_only, all_input };

/// Search limits; an empty optional means unlimited. Finite limits must be
/// positive.
struct SearchConfig {
  std::optional<std::size_t> max_proofs;
  std::optional<std::size_t> max_weight = 64;
  std::optional<std::size_t> max_given = 100000;
  std::optional<std::size_t> max_kept_clauses = 500000;
  SosPolicy sos_policy = SosPolicy::negated_conjecture_only;
  bool dedup_proofs = true;

  static SearchConfig unlimited();
  /// Throws std::invalid_argument when a finite limit is zero.
  void validate() const;
};

enum class SaturationStatus { saturated, limit_reached, proofs_exhausted_by_max };

std::string to_string(SosPolicy p);
std::string to_string(SaturationStatus s);

struct SaturationCounters {
  std::size_t given = 0;
  std::size_t generated = 0;
  std::size_t kept = 0;
  std::size_t discarded_subsumed = 0;
  std::size_t back_subsumed = 0;
  std::size_t discarded_weight = 0;
  std::size_t discarded_tautology = 0;
  std::size_t empty_clauses = 0;  // raw empty-clause occurrences
};

struct SaturationResult {
  SaturationStatus status = SaturationStatus::saturated;
  /// Which limit fired (`max_given`, `max_weight`, `max_kept_clauses`,
  /// `max_proofs`), empty when saturated.
  std::string limit;
  std::vector<ProofDag> refutations;
  DerivationLog log;
  SaturationCounters counters;
};

/// Given-clause saturation with set of support. Every empty clause is logged
/// and its proof extracted; the search continues until the passive set
/// empties, a limit fires, or `max_proofs` proofs have been recorded.
/// Throws std::invalid_argument for an empty clause list or invalid config.
SaturationResult saturate(const std::vector<InputClause>& clauses, const SearchConfig& config);

}  // namespace proofscope
