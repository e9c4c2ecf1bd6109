#include "proofscope/inference.hpp"

#include <algorithm>

#include "proofscope/unify.hpp"

namespace proofscope {

Clause rename_apart(const Clause& c1, const Clause& c2) {
  if (c2.ground() || c1.ground()) return c2;
  return shift_vars(c2, c1.max_var() + 1);
}

std::optional<Clause> resolve(const Clause& c1, std::size_t i, const Clause& c2, std::size_t j) {
  const Literal& a = c1[i];
  const Literal& b = c2[j];
  if (a.positive == b.positive || a.predicate() != b.predicate()) return std::nullopt;
  auto mgu = unify(a.atom, b.atom);
  if (!mgu) return std::nullopt;
  std::vector<Literal> lits;
  lits.reserve(c1.size() + c2.size() - 2);
  for (std::size_t k = 0; k < c1.size(); ++k) {
    if (k != i) lits.push_back(mgu->apply(c1[k]));
  }
  for (std::size_t k = 0; k < c2.size(); ++k) {
    if (k != j) lits.push_back(mgu->apply(c2[k]));
  }
  return remove_duplicate_literals(Clause(std::move(lits)));
}

std::vector<Clause> factor(const Clause& c) {
  std::vector<Clause> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (c[i].positive != c[j].positive || c[i].predicate() != c[j].predicate()) continue;
      auto mgu = unify(c[i].atom, c[j].atom);
      if (!mgu) continue;
      out.push_back(remove_duplicate_literals(mgu->apply(c)));
    }
  }
  return out;
}

namespace {

bool embed(const Clause& c, std::size_t k, const Clause& d, std::vector<bool>& used, Matcher& m) {
  if (k == c.size()) return true;
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (used[j]) continue;
    if (c[k].positive != d[j].positive || c[k].predicate() != d[j].predicate()) continue;
    const std::size_t mark = m.mark();
    if (m.match(c[k], d[j])) {
      used[j] = true;
      if (embed(c, k + 1, d, used, m)) return true;
      used[j] = false;
    }
    m.undo(mark);
  }
  return false;
}

}  // namespace

bool subsumes(const Clause& c, const Clause& d) {
  if (c.size() > d.size()) return false;
  // Every literal of c needs a same-sign, same-predicate partner in d.
  for (const auto& l : c.literals()) {
    const bool found = std::any_of(d.literals().begin(), d.literals().end(), [&](const Literal& m) {
      return m.positive == l.positive && m.predicate() == l.predicate();
    });
    if (!found) return false;
  }
  std::vector<bool> used(d.size(), false);
  Matcher m;
  return embed(c, 0, d, used, m);
}

bool is_tautology(const Clause& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (complementary(c[i], c[j])) return true;
    }
  }
  return false;
}

}  // namespace proofscope
