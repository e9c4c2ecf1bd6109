#include "proofscope/minimizer.hpp"

#include <algorithm>

#include "proofscope/clausify.hpp"

namespace proofscope {

std::string to_string(PremiseVerdict v) {
  switch (v) {
    case PremiseVerdict::needed: return "needed";
    case PremiseVerdict::redundant: return "redundant";
    case PremiseVerdict::unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(ProbeOutcome o) {
  switch (o) {
    case ProbeOutcome::proved: return "proved";
    case ProbeOutcome::unprovable: return "unprovable";
    case ProbeOutcome::unknown: return "unknown";
  }
  return "unknown";
}

SearchConfig default_probe_config() {
  SearchConfig c;
  c.max_given = 20000;
  c.max_proofs = 1;
  return c;
}

namespace {
bool is_goal(const AnnotatedInput& in) {
  return in.role == Role::conjecture || in.role == Role::negated_conjecture;
}
}  // namespace

std::vector<std::string> premise_labels(const ProblemSpec& spec) {
  std::vector<std::string> out;
  for (const auto& in : spec.inputs) {
    if (!is_goal(in)) out.push_back(in.label);
  }
  return out;
}

ProblemSpec restrict_premises(const ProblemSpec& spec, const std::vector<std::string>& keep) {
  ProblemSpec out;
  out.name = spec.name;
  out.symbols = spec.symbols;
  for (const auto& in : spec.inputs) {
    if (is_goal(in) || std::find(keep.begin(), keep.end(), in.label) != keep.end()) out.inputs.push_back(in);
  }
  return out;
}

ProbeOutcome probe(const ProblemSpec& spec, const std::vector<std::string>& premises, const SearchConfig& budget) {
  const ClausifiedProblem cp = clausify(restrict_premises(spec, premises));
  if (cp.clauses.empty()) return ProbeOutcome::unprovable;
  SearchConfig cfg = budget;
  cfg.max_proofs = 1;
  const SaturationResult r = saturate(cp.clauses, cfg);
  if (!r.refutations.empty()) return ProbeOutcome::proved;
  return r.status == SaturationStatus::saturated ? ProbeOutcome::unprovable : ProbeOutcome::unknown;
}

MinimizationResult minimize_premises(const ProblemSpec& spec, const SearchConfig& probe_config) {
  MinimizationResult res;
  res.budget_config = probe_config;
  res.budget_config.max_proofs = 1;

  std::vector<std::string> current = premise_labels(spec);
  const ProbeOutcome full = probe(spec, current, probe_config);
  ++res.probes;
  if (full == ProbeOutcome::unprovable) {
    throw MinimizationError(MinimizationError::Kind::unprovable, "goal is not provable from the full premise set");
  }
  if (full == ProbeOutcome::unknown) {
    throw MinimizationError(MinimizationError::Kind::budget_exhausted,
                            "probe budget exhausted on the full premise set without a proof");
  }

  std::vector<std::string> order = current;
  std::sort(order.begin(), order.end(), std::greater<>());
  for (const auto& label : order) {
    std::vector<std::string> without;
    std::copy_if(current.begin(), current.end(), std::back_inserter(without),
                 [&](const std::string& l) { return l != label; });
    const ProbeOutcome o = probe(spec, without, probe_config);
    ++res.probes;
    switch (o) {
      case ProbeOutcome::proved:
        res.verdicts[label] = PremiseVerdict::redundant;
        current = std::move(without);
        break;
      case ProbeOutcome::unprovable:
        res.verdicts[label] = PremiseVerdict::needed;
        break;
      case ProbeOutcome::unknown:
        res.verdicts[label] = PremiseVerdict::unknown;
        break;
    }
  }
  for (const auto& label : premise_labels(spec)) {
    if (std::find(current.begin(), current.end(), label) != current.end()) {
      res.kept.push_back(label);
    } else {
      res.removed.push_back(label);
    }
  }
  return res;
}

bool verify_minimality(const ProblemSpec& spec, const std::vector<std::string>& kept,
                       const SearchConfig& probe_config) {
  if (probe(spec, kept, probe_config) != ProbeOutcome::proved) return false;
  for (const auto& label : kept) {
    std::vector<std::string> without;
    std::copy_if(kept.begin(), kept.end(), std::back_inserter(without),
                 [&](const std::string& l) { return l != label; });
    if (probe(spec, without, probe_config) == ProbeOutcome::proved) return false;
  }
  return true;
}

std::optional<std::vector<std::string>> exhaustive_minimum(const ProblemSpec& spec, const SearchConfig& probe_config,
                                                           std::size_t max_premises) {
  const std::vector<std::string> all = premise_labels(spec);
  const std::size_t n = all.size();
  if (n > max_premises) return std::nullopt;
  for (std::size_t size = 0; size <= n; ++size) {
    // Lexicographic combinations of `size` indices.
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::vector<std::string> subset;
      for (std::size_t i = 0; i < n; ++i) {
        if (pick[i]) subset.push_back(all[i]);
      }
      if (probe(spec, subset, probe_config) == ProbeOutcome::proved) return subset;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return std::nullopt;
}

void flag_cardinality_gap(const ProblemSpec& spec, MinimizationResult& result, const SearchConfig& probe_config,
                          std::size_t max_premises) {
  result.exhaustive_minimum = exhaustive_minimum(spec, probe_config, max_premises);
  result.cardinality_gap = result.exhaustive_minimum && result.exhaustive_minimum->size() < result.kept.size();
}

}  // namespace proofscope
