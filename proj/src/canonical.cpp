#include "proofscope/canonical.hpp"

#include <algorithm>
#include <optional>

namespace proofscope {

namespace {

std::strong_ordering compare_blind(const Term& a, const Term& b) {
  if (a.is_variable() != b.is_variable()) {
    return a.is_variable() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a.is_variable()) return std::strong_ordering::equal;
  if (auto c = a.functor() <=> b.functor(); c != 0) return c;
  if (auto c = a.arity() <=> b.arity(); c != 0) return c;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (auto c = compare_blind(*a.args()[i], *b.args()[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_blind(const Literal& a, const Literal& b) {
  if (a.positive != b.positive) {
    return a.positive ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return compare_blind(*a.atom, *b.atom);
}

// Variable renaming built up in first-occurrence order.
struct Renaming {
  std::vector<int> map;  // original id -> new id, -1 when unassigned
  int next = 0;
  std::vector<int> assigned;  // trail for undo

  TermPtr rename(const TermPtr& t) {
    if (t->ground()) return t;
    if (t->is_variable()) {
      int& slot = map[t->var()];
      if (slot < 0) {
        slot = next++;
        assigned.push_back(t->var());
      }
      return Term::variable(slot);
    }
    std::vector<TermPtr> args;
    args.reserve(t->arity());
    for (const auto& a : t->args()) args.push_back(rename(a));
    return Term::application(t->functor(), std::move(args));
  }

  Literal rename(const Literal& l) { return {l.positive, rename(l.atom)}; }

  std::size_t mark() const { return assigned.size(); }
  void undo(std::size_t m) {
    while (assigned.size() > m) {
      map[assigned.back()] = -1;
      assigned.pop_back();
      --next;
    }
  }
};

class CanonicalSearch {
 public:
  CanonicalSearch(std::vector<Literal> sorted, std::vector<std::size_t> group_end, int max_var)
      : lits_(std::move(sorted)), group_end_(std::move(group_end)), used_(lits_.size(), false) {
    renaming_.map.assign(static_cast<std::size_t>(max_var + 1), -1);
  }

  std::vector<Literal> run() {
    search(0, false);
    return best_;
  }

 private:
  // `ahead` is true once the current prefix is already strictly below best_.
  void search(std::size_t pos, bool ahead) {
    if (pos == lits_.size()) {
      best_ = current_;
      return;
    }
    const std::size_t end = group_end_[pos];
    std::size_t begin = pos;
    while (begin > 0 && group_end_[begin - 1] == end) --begin;

    // Render every unused candidate of this group under the current renaming.
    std::vector<std::pair<std::size_t, Literal>> tied;
    for (std::size_t k = begin; k < end; ++k) {
      if (used_[k]) continue;
      const std::size_t m = renaming_.mark();
      Literal r = renaming_.rename(lits_[k]);
      renaming_.undo(m);
      if (tied.empty()) {
        tied.emplace_back(k, std::move(r));
        continue;
      }
      const auto c = compare_literals(r, tied.front().second);
      if (c < 0) {
        tied.clear();
        tied.emplace_back(k, std::move(r));
      } else if (c == 0) {
        tied.emplace_back(k, std::move(r));
      }
    }

    bool next_ahead = ahead;
    if (!ahead && !best_.empty()) {
      const auto c = compare_literals(tied.front().second, best_[pos]);
      if (c > 0) return;
      next_ahead = c < 0;
    }

    for (const auto& [k, rendered] : tied) {
      const std::size_t m = renaming_.mark();
      renaming_.rename(lits_[k]);
      used_[k] = true;
      current_.push_back(rendered);
      search(pos + 1, next_ahead);
      current_.pop_back();
      used_[k] = false;
      renaming_.undo(m);
      // After the first complete branch best_ holds this prefix; later tied
      // branches compare against it.
      next_ahead = false;
    }
  }

  std::vector<Literal> lits_;
  std::vector<std::size_t> group_end_;
  std::vector<bool> used_;
  Renaming renaming_;
  std::vector<Literal> current_;
  std::vector<Literal> best_;
};

}  // namespace

Clause canonical_clause(const Clause& c) {
  Clause dedup = remove_duplicate_literals(c);
  if (dedup.empty()) return dedup;
  std::vector<Literal> lits = dedup.literals();
  std::stable_sort(lits.begin(), lits.end(),
                   [](const Literal& a, const Literal& b) { return compare_blind(a, b) < 0; });
  std::vector<std::size_t> group_end(lits.size());
  for (std::size_t i = 0; i < lits.size();) {
    std::size_t j = i + 1;
    while (j < lits.size() && compare_blind(lits[i], lits[j]) == 0) ++j;
    for (std::size_t k = i; k < j; ++k) group_end[k] = j;
    i = j;
  }
  CanonicalSearch search(std::move(lits), std::move(group_end), dedup.max_var());
  return Clause(search.run());
}

std::string canonical_key(const Clause& c) { return to_string(canonical_clause(c)); }

}  // namespace proofscope
