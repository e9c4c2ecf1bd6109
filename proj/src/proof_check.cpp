#include <algorithm>
#include <set>

#include "proofscope/canonical.hpp"
#include "proofscope/inference.hpp"
#include "proofscope/proof.hpp"

namespace proofscope {

namespace {

bool derivable_by_resolution(const Clause& a, const Clause& b, const std::string& target) {
  const Clause b2 = rename_apart(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b2.size(); ++j) {
      auto r = resolve(a, i, b2, j);
      if (r && canonical_key(*r) == target) return true;
    }
  }
  return false;
}

bool derivable_by_factoring(const Clause& a, const std::string& target) {
  for (const auto& f : factor(a)) {
    if (canonical_key(f) == target) return true;
  }
  return false;
}

}  // namespace

ProofCheck check_proof(const ProofDag& p, const std::vector<Clause>* allowed_inputs) {
  auto root = p.nodes.find(p.root);
  if (root == p.nodes.end()) return ProofCheck::failure("root " + std::to_string(p.root) + " is not a node");
  if (!root->second.clause.empty()) return ProofCheck::failure("root is not the empty clause");

  for (const auto& [id, r] : p.nodes) {
    if (r.id != id) return ProofCheck::failure("node " + std::to_string(id) + " carries id " + std::to_string(r.id));
    for (ClauseId q : r.parents) {
      if (!p.nodes.count(q)) {
        return ProofCheck::failure("node " + std::to_string(id) + " has missing parent " + std::to_string(q));
      }
    }
  }

  // Iterative three-colour DFS for cycles.
  std::map<ClauseId, int> colour;
  for (const auto& [start, unused] : p.nodes) {
    if (colour[start] != 0) continue;
    std::vector<std::pair<ClauseId, std::size_t>> stack{{start, 0}};
    colour[start] = 1;
    while (!stack.empty()) {
      auto& [id, k] = stack.back();
      const auto& parents = p.nodes.at(id).parents;
      if (k == parents.size()) {
        colour[id] = 2;
        stack.pop_back();
        continue;
      }
      const ClauseId q = parents[k++];
      if (colour[q] == 1) return ProofCheck::failure("cycle through node " + std::to_string(q));
      if (colour[q] == 0) {
        colour[q] = 1;
        stack.emplace_back(q, 0);
      }
    }
  }

  std::set<std::string> allowed;
  if (allowed_inputs) {
    for (const auto& c : *allowed_inputs) allowed.insert(canonical_key(c));
  }

  for (const auto& [id, r] : p.nodes) {
    const std::string target = canonical_key(r.clause);
    const std::string where = "node " + std::to_string(id);
    switch (r.rule) {
      case Rule::input:
        if (!r.parents.empty()) return ProofCheck::failure(where + ": input with parents");
        if (allowed_inputs && !allowed.count(target)) {
          return ProofCheck::failure(where + ": input clause not in the problem");
        }
        break;
      case Rule::resolve:
        if (r.parents.size() != 2) return ProofCheck::failure(where + ": resolution needs two parents");
        if (!derivable_by_resolution(p.node(r.parents[0]).clause, p.node(r.parents[1]).clause, target)) {
          return ProofCheck::failure(where + ": not a resolvent of its parents");
        }
        break;
      case Rule::factor:
        if (r.parents.size() != 1) return ProofCheck::failure(where + ": factoring needs one parent");
        if (!derivable_by_factoring(p.node(r.parents[0]).clause, target)) {
          return ProofCheck::failure(where + ": not a factor of its parent");
        }
        break;
    }
  }
  return {};
}

}  // namespace proofscope
