#pragma once

#include <stdexcept>
#include <vector>

#include "proofscope/proof.hpp"

namespace proofscope {

/// Bounds for brute-force proof enumeration.
struct EnumerationBound {
  std::size_t max_total_clauses = 12;  // nodes per refutation DAG
  std::size_t max_clause_weight = 16;
  std::size_t max_depth = 6;           // saturation levels

  /// Throws std::invalid_argument when a bound is zero.
  void validate() const;
};

class EnumerationOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every refutation DAG constructible within `bound`, pairwise non-identical.
///
/// Level saturation with unrestricted binary resolution and factoring (no
/// deletion of any kind, no set of support) records every way each clause
/// can be derived. Each refutation picks one justification per clause (one
/// node per canonical clause), acyclically, starting from the empty clause.
/// Throws EnumerationOverflow when more than `result_cap` refutations or
/// `clause_cap` distinct clauses arise.
std::vector<ProofDag> enumerate_refutations_bounded(const std::vector<Clause>& clauses,
                                                    const EnumerationBound& bound,
                                                    std::size_t result_cap = 200000,
                                                    std::size_t clause_cap = 20000);

std::size_t count_distinct_refutations(const std::vector<Clause>& clauses, const EnumerationBound& bound,
                                       std::size_t result_cap = 200000);

}  // namespace proofscope
