#include "proofscope/proof.hpp"

#include <vector>

namespace proofscope {

std::string to_string(Rule r) {
  switch (r) {
    case Rule::input: return "input";
    case Rule::resolve: return "resolve";
    case Rule::factor: return "factor";
  }
  return "input";
}

std::optional<Rule> parse_rule(const std::string& s) {
  if (s == "input") return Rule::input;
  if (s == "resolve") return Rule::resolve;
  if (s == "factor") return Rule::factor;
  return std::nullopt;
}

ClauseId DerivationLog::append(InferenceRecord record, const std::string& canonical_key) {
  const auto id = static_cast<ClauseId>(records_.size() + 1);
  record.id = id;
  records_.push_back(std::move(record));
  first_.emplace(canonical_key, id);
  return id;
}

const InferenceRecord& DerivationLog::at(ClauseId id) const {
  if (!contains(id)) throw UnknownClauseError("unknown clause id " + std::to_string(id));
  return records_[id - 1];
}

std::optional<ClauseId> DerivationLog::first_id(const std::string& canonical_key) const {
  auto it = first_.find(canonical_key);
  if (it == first_.end()) return std::nullopt;
  return it->second;
}

std::string to_text(const InferenceRecord& r) {
  std::string out = std::to_string(r.id) + ". " + to_string(r.clause) + " [" + to_string(r.rule);
  if (r.rule == Rule::input && r.input_label) out += ", " + *r.input_label;
  for (ClauseId p : r.parents) out += ", " + std::to_string(p);
  return out + "]";
}

std::string DerivationLog::to_text() const {
  std::string out;
  for (const auto& r : records_) out += proofscope::to_text(r) + "\n";
  return out;
}

std::string ProofDag::to_text() const {
  std::string out;
  for (const auto& [id, r] : nodes) out += proofscope::to_text(r) + "\n";
  return out;
}

ProofDag extract_proof(ClauseId empty_id, const DerivationLog& log) {
  const InferenceRecord& root = log.at(empty_id);
  if (!root.clause.empty()) {
    throw std::invalid_argument("clause " + std::to_string(empty_id) + " is not the empty clause");
  }
  ProofDag dag;
  dag.root = empty_id;
  std::vector<ClauseId> stack{empty_id};
  while (!stack.empty()) {
    const ClauseId id = stack.back();
    stack.pop_back();
    if (dag.nodes.count(id)) continue;
    const InferenceRecord& r = log.at(id);
    dag.nodes.emplace(id, r);
    for (ClauseId p : r.parents) stack.push_back(p);
  }
  return dag;
}

}  // namespace proofscope
