#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "proofscope/term.hpp"

namespace proofscope {

struct Literal {
  bool positive = true;
  TermPtr atom;  // application whose functor is the predicate symbol

  Symbol predicate() const { return atom->functor(); }
  Literal complement() const { return {!positive, atom}; }
};

/// Structural order: polarity (positive first), then atom.
std::strong_ordering compare_literals(const Literal& a, const Literal& b);
bool literals_equal(const Literal& a, const Literal& b);
bool complementary(const Literal& a, const Literal& b);

/// A disjunction of literals. Variables are implicitly universally quantified
/// and local to the clause. The empty clause denotes contradiction.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Literal> literals);

  const std::vector<Literal>& literals() const { return literals_; }
  const Literal& operator[](std::size_t i) const { return literals_[i]; }
  std::size_t size() const { return literals_.size(); }
  bool empty() const { return literals_.empty(); }

  std::size_t weight() const { return weight_; }
  int max_var() const { return max_var_; }
  bool ground() const { return max_var_ < 0; }

  friend bool operator==(const Clause& a, const Clause& b);

 private:
  std::vector<Literal> literals_;
  std::size_t weight_ = 0;
  int max_var_ = -1;
};

/// Copy of `c` with every variable id shifted by `offset`.
Clause shift_vars(const Clause& c, int offset);

/// Removes syntactically repeated literals, keeping first occurrences.
Clause remove_duplicate_literals(const Clause& c);

/// `p(V0) | -q(V1)`; the empty clause prints as `$false`.
std::string to_string(const Literal& l);
std::string to_string(const Clause& c);

}  // namespace proofscope
