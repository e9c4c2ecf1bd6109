#include "proofscope/clause.hpp"

#include <algorithm>

namespace proofscope {

std::strong_ordering compare_literals(const Literal& a, const Literal& b) {
  if (a.positive != b.positive) {
    return a.positive ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return compare_terms(*a.atom, *b.atom);
}

bool literals_equal(const Literal& a, const Literal& b) {
  return a.positive == b.positive && terms_equal(*a.atom, *b.atom);
}

bool complementary(const Literal& a, const Literal& b) {
  return a.positive != b.positive && terms_equal(*a.atom, *b.atom);
}

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
  for (const auto& l : literals_) {
    weight_ += l.atom->weight();
    max_var_ = std::max(max_var_, l.atom->max_var());
  }
}

bool operator==(const Clause& a, const Clause& b) {
  if (a.size() != b.size() || a.weight() != b.weight()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!literals_equal(a[i], b[i])) return false;
  }
  return true;
}

Clause shift_vars(const Clause& c, int offset) {
  if (offset == 0 || c.ground()) return c;
  std::vector<Literal> lits;
  lits.reserve(c.size());
  for (const auto& l : c.literals()) lits.push_back({l.positive, shift_vars(l.atom, offset)});
  return Clause(std::move(lits));
}

Clause remove_duplicate_literals(const Clause& c) {
  std::vector<Literal> out;
  out.reserve(c.size());
  for (const auto& l : c.literals()) {
    const bool seen = std::any_of(out.begin(), out.end(),
                                  [&](const Literal& m) { return literals_equal(l, m); });
    if (!seen) out.push_back(l);
  }
  if (out.size() == c.size()) return c;
  return Clause(std::move(out));
}

std::string to_string(const Literal& l) {
  const Term& a = *l.atom;
  if (a.functor() == equality_symbol() && a.arity() == 2) {
    return to_string(*a.args()[0]) + (l.positive ? " = " : " != ") + to_string(*a.args()[1]);
  }
  return (l.positive ? "" : "-") + to_string(a);
}

std::string to_string(const Clause& c) {
  if (c.empty()) return "$false";
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += " | ";
    out += to_string(c[i]);
  }
  return out;
}

}  // namespace proofscope
