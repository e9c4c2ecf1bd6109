#include "proofscope/analysis.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

#include "proofscope/canonical.hpp"
#include "proofscope/hash.hpp"

namespace proofscope {

namespace {

// Per-node canonical keys and bottom-up signatures of one proof.
struct ProofIndex {
  std::map<ClauseId, std::string> key;
  std::map<ClauseId, std::uint64_t> hash;

  explicit ProofIndex(const ProofDag& p) {
    for (const auto& [id, r] : p.nodes) key.emplace(id, canonical_key(r.clause));
    for (const auto& [id, r] : p.nodes) compute(p, id);
  }

  std::uint64_t compute(const ProofDag& p, ClauseId root) {
    // Iterative post-order; proofs can be deep.
    std::vector<std::pair<ClauseId, bool>> stack{{root, false}};
    while (!stack.empty()) {
      auto [id, expanded] = stack.back();
      stack.pop_back();
      if (hash.count(id)) continue;
      const InferenceRecord& r = p.node(id);
      if (!expanded) {
        stack.emplace_back(id, true);
        for (ClauseId q : r.parents) {
          if (!hash.count(q)) stack.emplace_back(q, false);
        }
        continue;
      }
      std::vector<std::uint64_t> parents;
      for (ClauseId q : r.parents) parents.push_back(hash.at(q));
      std::sort(parents.begin(), parents.end());
      std::uint64_t h = hash_combine(fnv1a(key.at(id)), static_cast<std::uint64_t>(r.rule));
      h = hash_combine(h, parents.size());
      for (auto ph : parents) h = hash_combine(h, ph);
      hash.emplace(id, h);
    }
    return hash.at(root);
  }
};

class Isomorphism {
 public:
  Isomorphism(const ProofDag& a, const ProofDag& b, const ProofIndex& ia, const ProofIndex& ib)
      : a_(a), b_(b), ia_(ia), ib_(ib) {}

  bool run() {
    if (!compatible(a_.root, b_.root)) return false;
    bind(a_.root, b_.root);
    return process(0);
  }

 private:
  bool compatible(ClauseId u, ClauseId v) const {
    const auto& ru = a_.node(u);
    const auto& rv = b_.node(v);
    return ia_.hash.at(u) == ib_.hash.at(v) && ru.rule == rv.rule && ru.parents.size() == rv.parents.size() &&
           ia_.key.at(u) == ib_.key.at(v);
  }

  void bind(ClauseId u, ClauseId v) {
    fwd_[u] = v;
    back_[v] = u;
    queue_.emplace_back(u, v);
  }

  void unbind_to(std::size_t queue_size) {
    while (queue_.size() > queue_size) {
      fwd_.erase(queue_.back().first);
      back_.erase(queue_.back().second);
      queue_.pop_back();
    }
  }

  bool process(std::size_t idx) {
    if (idx == queue_.size()) return fwd_.size() == a_.size() && back_.size() == b_.size();
    const auto [u, v] = queue_[idx];
    std::vector<bool> used(b_.node(v).parents.size(), false);
    return match_parents(idx, u, v, 0, used);
  }

  bool match_parents(std::size_t idx, ClauseId u, ClauseId v, std::size_t k, std::vector<bool>& used) {
    const auto& pu = a_.node(u).parents;
    const auto& pv = b_.node(v).parents;
    if (k == pu.size()) return process(idx + 1);
    const ClauseId x = pu[k];
    for (std::size_t l = 0; l < pv.size(); ++l) {
      if (used[l]) continue;
      const ClauseId y = pv[l];
      auto fx = fwd_.find(x);
      const std::size_t mark = queue_.size();
      if (fx != fwd_.end()) {
        if (fx->second != y) continue;
      } else {
        if (back_.count(y) || !compatible(x, y)) continue;
        bind(x, y);
      }
      used[l] = true;
      if (match_parents(idx, u, v, k + 1, used)) return true;
      used[l] = false;
      unbind_to(mark);
    }
    return false;
  }

  const ProofDag& a_;
  const ProofDag& b_;
  const ProofIndex& ia_;
  const ProofIndex& ib_;
  std::map<ClauseId, ClauseId> fwd_;
  std::map<ClauseId, ClauseId> back_;
  std::vector<std::pair<ClauseId, ClauseId>> queue_;
};

bool identical_indexed(const ProofDag& p1, const ProofDag& p2, const ProofIndex& i1, const ProofIndex& i2) {
  if (p1.size() != p2.size()) return false;
  if (!p1.nodes.count(p1.root) || !p2.nodes.count(p2.root)) return false;
  std::vector<std::uint64_t> h1, h2;
  for (const auto& [id, h] : i1.hash) h1.push_back(h);
  for (const auto& [id, h] : i2.hash) h2.push_back(h);
  std::sort(h1.begin(), h1.end());
  std::sort(h2.begin(), h2.end());
  if (h1 != h2) return false;
  return Isomorphism(p1, p2, i1, i2).run();
}

ClauseSet root_premises(const ProofDag& p) {
  ClauseSet out;
  for (ClauseId q : p.root_node().parents) {
    const Clause c = canonical_clause(p.node(q).clause);
    out.emplace(to_string(c), c);
  }
  return out;
}

bool subset_of(const ClauseSet& a, const ClauseSet& b) {
  return std::all_of(a.begin(), a.end(), [&](const auto& kv) { return b.count(kv.first) > 0; });
}

}  // namespace

std::size_t proof_length(const ProofDag& p) { return p.size(); }

ProofMetrics proof_metrics(const ProofDag& p) {
  ProofMetrics m;
  m.length = p.size();
  std::map<ClauseId, std::size_t> depth;
  // std::map iterates ids ascending; parents may still follow children in
  // hand-built DAGs, so resolve depth with an explicit stack.
  for (const auto& [start, unused] : p.nodes) {
    std::vector<std::pair<ClauseId, bool>> stack{{start, false}};
    while (!stack.empty()) {
      auto [id, expanded] = stack.back();
      stack.pop_back();
      if (depth.count(id)) continue;
      const auto& r = p.node(id);
      if (!expanded) {
        stack.emplace_back(id, true);
        for (ClauseId q : r.parents) {
          if (!depth.count(q)) stack.emplace_back(q, false);
        }
        continue;
      }
      std::size_t d = 0;
      for (ClauseId q : r.parents) d = std::max(d, depth.at(q) + 1);
      depth[id] = d;
    }
  }
  for (const auto& [id, r] : p.nodes) {
    if (r.rule == Rule::input) {
      ++m.input_count;
    } else {
      ++m.derived_count;
    }
    m.max_clause_weight = std::max(m.max_clause_weight, r.clause.weight());
  }
  if (p.nodes.count(p.root)) m.depth = depth.at(p.root);
  return m;
}

ClauseSet clause_set(const ProofDag& p) {
  ClauseSet out;
  for (const auto& [id, r] : p.nodes) {
    Clause c = canonical_clause(r.clause);
    out.emplace(to_string(c), std::move(c));
  }
  return out;
}

ClauseSet shared_clauses(const ProofDag& p1, const ProofDag& p2) {
  const ClauseSet a = clause_set(p1);
  const ClauseSet b = clause_set(p2);
  ClauseSet out;
  for (const auto& [k, c] : a) {
    if (b.count(k)) out.emplace(k, c);
  }
  return out;
}

std::uint64_t proof_signature(const ProofDag& p) {
  ProofIndex idx(p);
  return p.nodes.count(p.root) ? idx.hash.at(p.root) : 0;
}

bool proofs_identical(const ProofDag& p1, const ProofDag& p2) {
  if (p1.size() != p2.size()) return false;
  ProofIndex i1(p1);
  ProofIndex i2(p2);
  return identical_indexed(p1, p2, i1, i2);
}

bool ProofSet::contains(const ProofDag& p) const {
  const std::uint64_t sig = proof_signature(p);
  auto [lo, hi] = by_signature_.equal_range(sig);
  for (auto it = lo; it != hi; ++it) {
    if (proofs_identical(proofs_[it->second], p)) return true;
  }
  return false;
}

bool ProofSet::insert(ProofDag p) {
  if (contains(p)) return false;
  by_signature_.emplace(proof_signature(p), proofs_.size());
  proofs_.push_back(std::move(p));
  return true;
}

ProofDiff proof_diff(const ProofDag& p1, const ProofDag& p2) {
  ProofDiff d;
  const ClauseSet a = clause_set(p1);
  const ClauseSet b = clause_set(p2);
  for (const auto& [k, c] : a) {
    if (b.count(k)) {
      d.shared.emplace(k, c);
    } else {
      d.only_first.emplace(k, c);
    }
  }
  for (const auto& [k, c] : b) {
    if (!a.count(k)) d.only_second.emplace(k, c);
  }
  d.identical = proofs_identical(p1, p2);
  d.final_step_only =
      !d.identical && subset_of(d.only_first, root_premises(p1)) && subset_of(d.only_second, root_premises(p2));
  return d;
}

AnalysisReport analyze(const std::vector<ProofDag>& proofs) {
  for (std::size_t i = 0; i < proofs.size(); ++i) {
    if (auto check = check_proof(proofs[i]); !check) {
      throw std::invalid_argument("proof " + std::to_string(i) + " is invalid: " + check.reason);
    }
  }
  AnalysisReport rep;
  const std::size_t n = proofs.size();
  std::vector<ProofIndex> index;
  std::vector<ClauseSet> sets;
  index.reserve(n);
  for (const auto& p : proofs) {
    index.emplace_back(p);
    sets.push_back(clause_set(p));
    rep.metrics.push_back(proof_metrics(p));
    ++rep.spectrum[rep.metrics.back().length];
  }
  rep.identity.assign(n, std::vector<bool>(n, false));
  rep.shared.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    rep.identity[i][i] = true;
    rep.shared[i][i] = sets[i].size();
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool same = identical_indexed(proofs[i], proofs[j], index[i], index[j]);
      rep.identity[i][j] = rep.identity[j][i] = same;
      PairDiff pd{i, j, {}};
      for (const auto& [k, c] : sets[i]) {
        if (sets[j].count(k)) {
          pd.diff.shared.emplace(k, c);
        } else {
          pd.diff.only_first.emplace(k, c);
        }
      }
      for (const auto& [k, c] : sets[j]) {
        if (!sets[i].count(k)) pd.diff.only_second.emplace(k, c);
      }
      pd.diff.identical = same;
      pd.diff.final_step_only = !same && subset_of(pd.diff.only_first, root_premises(proofs[i])) &&
                                subset_of(pd.diff.only_second, root_premises(proofs[j]));
      rep.shared[i][j] = rep.shared[j][i] = pd.diff.shared.size();
      rep.diffs.push_back(std::move(pd));
    }
  }
  if (n > 0) {
    rep.common_core = sets[0];
    for (std::size_t i = 1; i < n; ++i) {
      std::erase_if(rep.common_core, [&](const auto& kv) { return !sets[i].count(kv.first); });
    }
  }
  return rep;
}

ProofDag structural_tidy(const ProofDag& p) {
  // Kahn order, smallest id first among ready nodes.
  std::map<ClauseId, std::size_t> pending;
  std::map<ClauseId, std::vector<ClauseId>> children;
  for (const auto& [id, r] : p.nodes) {
    pending[id] = r.parents.size();
    for (ClauseId q : r.parents) children[q].push_back(id);
  }
  std::priority_queue<ClauseId, std::vector<ClauseId>, std::greater<>> ready;
  for (const auto& [id, n] : pending) {
    if (n == 0) ready.push(id);
  }
  std::map<std::string, ClauseId> first;
  std::map<ClauseId, ClauseId> redirect;
  while (!ready.empty()) {
    const ClauseId id = ready.top();
    ready.pop();
    auto [it, inserted] = first.emplace(canonical_key(p.node(id).clause), id);
    if (!inserted) redirect[id] = it->second;
    for (ClauseId c : children[id]) {
      if (--pending[c] == 0) ready.push(c);
    }
  }
  auto target = [&](ClauseId id) {
    auto it = redirect.find(id);
    return it == redirect.end() ? id : it->second;
  };

  ProofDag out;
  out.root = target(p.root);
  std::vector<ClauseId> stack{out.root};
  while (!stack.empty()) {
    const ClauseId id = stack.back();
    stack.pop_back();
    if (out.nodes.count(id)) continue;
    InferenceRecord r = p.node(id);
    for (auto& q : r.parents) q = target(q);
    for (ClauseId q : r.parents) stack.push_back(q);
    out.nodes.emplace(id, std::move(r));
  }
  return out;
}

}  // namespace proofscope
