#include "proofscope/oracle.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "proofscope/analysis.hpp"
#include "proofscope/canonical.hpp"
#include "proofscope/inference.hpp"

namespace proofscope {

void EnumerationBound::validate() const {
  if (max_total_clauses == 0 || max_clause_weight == 0 || max_depth == 0) {
    throw std::invalid_argument("enumeration bounds must be positive");
  }
}

namespace {

struct Justification {
  Rule rule = Rule::input;
  std::vector<std::size_t> parents;  // universe indices, sorted

  friend bool operator==(const Justification&, const Justification&) = default;
};

struct Entry {
  Clause clause;
  std::size_t depth = 0;
  std::vector<Justification> ways;
  std::string label;
};

class Universe {
 public:
  Universe(const EnumerationBound& bound, std::size_t clause_cap) : bound_(bound), cap_(clause_cap) {}

  void add_input(const Clause& c, std::size_t k) {
    const std::size_t idx = intern(canonical_clause(c), 0);
    if (idx == npos) return;
    Justification j{Rule::input, {}};
    auto& e = entries_[idx];
    if (std::find(e.ways.begin(), e.ways.end(), j) == e.ways.end()) e.ways.push_back(j);
    if (e.label.empty()) e.label = "in" + std::to_string(k);
  }

  void saturate() {
    for (std::size_t level = 1; level <= bound_.max_depth; ++level) {
      const std::size_t before = entries_.size();
      std::vector<std::size_t> fresh;
      for (std::size_t i = 0; i < before; ++i) {
        if (entries_[i].depth == level - 1) fresh.push_back(i);
      }
      if (fresh.empty()) break;
      for (std::size_t a : fresh) {
        for (Clause& f : factor(entries_[a].clause)) add_derived(std::move(f), level, Rule::factor, {a});
      }
      for (std::size_t a : fresh) {
        for (std::size_t b = 0; b < before; ++b) {
          // Pairs with both ends fresh are visited once.
          if (entries_[b].depth == level - 1 && b < a) continue;
          resolve_pair(a, b, level);
        }
      }
    }
  }

  const std::vector<Entry>& entries() const { return entries_; }

  std::size_t find(const std::string& key) const {
    auto it = index_.find(key);
    return it == index_.end() ? npos : it->second;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  void resolve_pair(std::size_t a, std::size_t b, std::size_t level) {
    const Clause ca = entries_[a].clause;
    const Clause cb = rename_apart(ca, entries_[b].clause);
    for (std::size_t i = 0; i < ca.size(); ++i) {
      for (std::size_t j = 0; j < cb.size(); ++j) {
        auto r = resolve(ca, i, cb, j);
        if (!r) continue;
        std::vector<std::size_t> parents{std::min(a, b), std::max(a, b)};
        add_derived(std::move(*r), level, Rule::resolve, std::move(parents));
      }
    }
  }

  void add_derived(Clause raw, std::size_t level, Rule rule, std::vector<std::size_t> parents) {
    Clause c = canonical_clause(raw);
    if (c.weight() > bound_.max_clause_weight) return;
    const std::size_t idx = intern(std::move(c), level);
    if (idx == npos) return;
    Justification j{rule, std::move(parents)};
    auto& ways = entries_[idx].ways;
    if (std::find(ways.begin(), ways.end(), j) == ways.end()) ways.push_back(std::move(j));
  }

  std::size_t intern(Clause c, std::size_t depth) {
    const std::string key = to_string(c);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    if (entries_.size() >= cap_) {
      throw EnumerationOverflow("oracle universe exceeds " + std::to_string(cap_) + " clauses");
    }
    entries_.push_back({std::move(c), depth, {}, {}});
    index_.emplace(key, entries_.size() - 1);
    return entries_.size() - 1;
  }

  EnumerationBound bound_;
  std::size_t cap_;
  std::vector<Entry> entries_;
  std::map<std::string, std::size_t> index_;
};

class DagEnumerator {
 public:
  DagEnumerator(const Universe& u, const EnumerationBound& bound, std::size_t cap)
      : u_(u), bound_(bound), cap_(cap), choice_(u.entries().size(), -1), open_mark_(u.entries().size(), false) {}

  std::vector<ProofDag> run(std::size_t root) {
    root_ = root;
    open_.insert(root);
    open_mark_[root] = true;
    dfs();
    return found_.release();
  }

 private:
  bool reaches(std::size_t from, std::size_t target) const {
    std::vector<std::size_t> stack{from};
    std::set<std::size_t> seen;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      if (x == target) return true;
      if (!seen.insert(x).second || choice_[x] < 0) continue;
      for (std::size_t q : u_.entries()[x].ways[static_cast<std::size_t>(choice_[x])].parents) stack.push_back(q);
    }
    return false;
  }

  void dfs() {
    if (open_.empty()) {
      emit();
      return;
    }
    const std::size_t node = *open_.begin();
    open_.erase(open_.begin());
    open_mark_[node] = false;
    const auto& ways = u_.entries()[node].ways;
    for (std::size_t w = 0; w < ways.size(); ++w) {
      const auto& parents = ways[w].parents;
      if (std::find(parents.begin(), parents.end(), node) != parents.end()) continue;
      bool cyclic = false;
      for (std::size_t q : parents) {
        if (choice_[q] >= 0 && reaches(q, node)) cyclic = true;
      }
      if (cyclic) continue;
      std::vector<std::size_t> opened;
      for (std::size_t q : parents) {
        if (choice_[q] < 0 && !open_mark_[q]) {
          open_mark_[q] = true;
          open_.insert(q);
          opened.push_back(q);
        }
      }
      choice_[node] = static_cast<int>(w);
      ++chosen_;
      if (chosen_ + open_.size() <= bound_.max_total_clauses) dfs();
      --chosen_;
      choice_[node] = -1;
      for (std::size_t q : opened) {
        open_mark_[q] = false;
        open_.erase(q);
      }
    }
    open_.insert(node);
    open_mark_[node] = true;
  }

  void emit() {
    // Renumber nodes topologically (parents first, smaller universe index first).
    std::vector<std::size_t> nodes;
    for (std::size_t i = 0; i < choice_.size(); ++i) {
      if (choice_[i] >= 0) nodes.push_back(i);
    }
    std::map<std::size_t, std::size_t> pending;
    std::map<std::size_t, std::vector<std::size_t>> children;
    for (std::size_t n : nodes) {
      const auto& ps = way(n).parents;
      std::set<std::size_t> distinct(ps.begin(), ps.end());
      pending[n] = distinct.size();
      for (std::size_t q : distinct) children[q].push_back(n);
    }
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (const auto& [n, k] : pending) {
      if (k == 0) ready.push(n);
    }
    std::map<std::size_t, ClauseId> ids;
    ProofDag dag;
    while (!ready.empty()) {
      const std::size_t n = ready.top();
      ready.pop();
      const auto id = static_cast<ClauseId>(ids.size() + 1);
      ids[n] = id;
      InferenceRecord r;
      r.id = id;
      r.clause = u_.entries()[n].clause;
      r.rule = way(n).rule;
      for (std::size_t q : way(n).parents) r.parents.push_back(ids.at(q));
      if (r.rule == Rule::input) r.input_label = u_.entries()[n].label;
      dag.nodes.emplace(id, std::move(r));
      for (std::size_t c : children[n]) {
        if (--pending[c] == 0) ready.push(c);
      }
    }
    dag.root = ids.at(root_);
    found_.insert(std::move(dag));
    if (found_.size() > cap_) {
      throw EnumerationOverflow("more than " + std::to_string(cap_) + " refutations within bound");
    }
  }

  const Justification& way(std::size_t n) const {
    return u_.entries()[n].ways[static_cast<std::size_t>(choice_[n])];
  }

  const Universe& u_;
  EnumerationBound bound_;
  std::size_t cap_;
  std::vector<int> choice_;
  std::vector<bool> open_mark_;
  std::set<std::size_t> open_;
  std::size_t chosen_ = 0;
  std::size_t root_ = 0;
  ProofSet found_;
};

}  // namespace

std::vector<ProofDag> enumerate_refutations_bounded(const std::vector<Clause>& clauses,
                                                    const EnumerationBound& bound, std::size_t result_cap,
                                                    std::size_t clause_cap) {
  bound.validate();
  Universe u(bound, clause_cap);
  for (std::size_t k = 0; k < clauses.size(); ++k) u.add_input(clauses[k], k);
  u.saturate();
  const std::size_t root = u.find("$false");
  if (root == Universe::npos) return {};
  return DagEnumerator(u, bound, result_cap).run(root);
}

std::size_t count_distinct_refutations(const std::vector<Clause>& clauses, const EnumerationBound& bound,
                                       std::size_t result_cap) {
  return enumerate_refutations_bounded(clauses, bound, result_cap).size();
}

}  // namespace proofscope
