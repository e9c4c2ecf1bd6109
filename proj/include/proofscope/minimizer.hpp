#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "proofscope/formula.hpp"
#include "proofscope/saturation.hpp"

namespace proofscope {

enum class PremiseVerdict { needed, redundant, unknown };
std::string to_string(PremiseVerdict v);

enum class ProbeOutcome { proved, unprovable, unknown };
std::string to_string(ProbeOutcome o);

struct MinimizationResult {
  std::vector<std::string> kept;     // includes premises with unknown verdicts
  std::vector<std::string> removed;
  std::map<std::string, PremiseVerdict> verdicts;
  SearchConfig budget_config;
  std::size_t probes = 0;
  /// Minimum-cardinality sufficient subset, when an exhaustive check ran.
  std::optional<std::vector<std::string>> exhaustive_minimum;
  /// True when the exhaustive minimum is strictly smaller than `kept`.
  bool cardinality_gap = false;
};

class MinimizationError : public std::runtime_error {
 public:
  enum class Kind { unprovable, budget_exhausted };
  MinimizationError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Probe budget: max_given 20,000 and a single proof.
SearchConfig default_probe_config();

/// Labels of inputs that are neither conjecture nor negated conjecture.
std::vector<std::string> premise_labels(const ProblemSpec& spec);

/// `spec` without the premises not listed in `keep`; goals are always kept.
ProblemSpec restrict_premises(const ProblemSpec& spec, const std::vector<std::string>& keep);

/// Saturates the restricted problem with max_proofs forced to 1.
ProbeOutcome probe(const ProblemSpec& spec, const std::vector<std::string>& premises, const SearchConfig& budget);

/// Greedy single deletion in descending label order. A premise is dropped
/// when the goal stays provable without it; a probe that hits a limit
/// without a proof keeps the premise with verdict unknown. Throws
/// MinimizationError when the full problem is not provable within budget.
MinimizationResult minimize_premises(const ProblemSpec& spec, const SearchConfig& probe_config);

/// True iff `kept` proves the goal and no single deletion from it does.
bool verify_minimality(const ProblemSpec& spec, const std::vector<std::string>& kept, const SearchConfig& probe_config);

/// Smallest sufficient premise subset by enumeration in order of size, or
/// nullopt when there are more than `max_premises` premises or none proves.
std::optional<std::vector<std::string>> exhaustive_minimum(const ProblemSpec& spec, const SearchConfig& probe_config,
                                                           std::size_t max_premises = 10);

/// Fills `exhaustive_minimum` and `cardinality_gap` of `result`.
void flag_cardinality_gap(const ProblemSpec& spec, MinimizationResult& result, const SearchConfig& probe_config,
                          std::size_t max_premises = 10);

}  // namespace proofscope
