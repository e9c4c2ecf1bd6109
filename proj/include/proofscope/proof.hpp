#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "proofscope/clause.hpp"
#include "proofscope/formula.hpp"

namespace proofscope {

using ClauseId = std::uint32_t;

enum class Rule { input, resolve, factor };

std::string to_string(Rule r);
std::optional<Rule> parse_rule(const std::string& s);

struct InferenceRecord {
  ClauseId id = 0;
  Clause clause;  // canonical
  Rule rule = Rule::input;
  std::vector<ClauseId> parents;  // empty for inputs; ids precede `id`
  std::optional<std::string> input_label;
  std::optional<Role> input_role;
};

/// Append-only record of every kept clause, with dense ids starting at 1.
class DerivationLog {
 public:
  /// Assigns the next id to `record` and returns it.
  ClauseId append(InferenceRecord record, const std::string& canonical_key);

  const std::vector<InferenceRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  bool contains(ClauseId id) const { return id >= 1 && id <= records_.size(); }
  const InferenceRecord& at(ClauseId id) const;

  /// First id under which a clause with this canonical key was logged.
  std::optional<ClauseId> first_id(const std::string& canonical_key) const;

  /// One line per record: `id. <clause> [rule, parents]`.
  std::string to_text() const;

 private:
  std::vector<InferenceRecord> records_;
  std::unordered_map<std::string, ClauseId> first_;
};

std::string to_text(const InferenceRecord& r);

/// Ancestor-closed sub-DAG of a derivation, rooted at an empty clause.
struct ProofDag {
  std::map<ClauseId, InferenceRecord> nodes;
  ClauseId root = 0;

  std::size_t size() const { return nodes.size(); }
  const InferenceRecord& node(ClauseId id) const { return nodes.at(id); }
  const InferenceRecord& root_node() const { return nodes.at(root); }
  std::string to_text() const;
};

class UnknownClauseError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Ancestor closure of `empty_id` in `log`. Throws UnknownClauseError for an
/// id not in the log and std::invalid_argument when it is not an empty clause.
ProofDag extract_proof(ClauseId empty_id, const DerivationLog& log);

struct ProofCheck {
  bool ok = true;
  std::string reason;

  explicit operator bool() const { return ok; }
  static ProofCheck failure(std::string why) { return {false, std::move(why)}; }
};

/// Validates acyclicity, ancestor closure, an empty root, and re-derives each
/// non-input node from its parents with resolve/factor up to canonical form.
/// When `allowed_inputs` is given, every input node must be a variant of one
/// of those clauses.
ProofCheck check_proof(const ProofDag& p, const std::vector<Clause>* allowed_inputs = nullptr);

}  // namespace proofscope
