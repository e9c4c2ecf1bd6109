#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "proofscope/symbol.hpp"

namespace proofscope {

class Term;
using TermPtr = std::shared_ptr<const Term>;

/// Immutable first-order term: a variable or a function application.
/// Constants are 0-ary applications. Predicate atoms reuse the same
/// representation with the predicate symbol as functor.
class Term {
 public:
  enum class Kind { variable, application };

  static TermPtr variable(int id);
  static TermPtr application(Symbol functor, std::vector<TermPtr> args = {});

  Kind kind() const { return kind_; }
  bool is_variable() const { return kind_ == Kind::variable; }
  int var() const { return var_; }
  Symbol functor() const { return functor_; }
  const std::vector<TermPtr>& args() const { return args_; }
  std::size_t arity() const { return args_.size(); }

  /// Symbol occurrences; each variable occurrence counts 1.
  std::size_t weight() const { return weight_; }
  bool ground() const { return ground_; }
  /// Largest variable id occurring in the term, or -1 when ground.
  int max_var() const { return max_var_; }

  // Use the factory functions.
  Term(Kind kind, int var, Symbol functor, std::vector<TermPtr> args);

 private:
  Kind kind_;
  int var_ = -1;
  Symbol functor_;
  std::vector<TermPtr> args_;
  std::size_t weight_ = 1;
  bool ground_ = true;
  int max_var_ = -1;
};

/// Structural total order: variables precede applications, variables by id,
/// applications by functor name, then arity, then arguments left to right.
std::strong_ordering compare_terms(const Term& a, const Term& b);
bool terms_equal(const Term& a, const Term& b);

bool occurs_in(int var, const Term& t);

/// Adds `offset` to every variable id.
TermPtr shift_vars(const TermPtr& t, int offset);

/// Textual form; variables print as V<id>, equality atoms print infix.
std::string to_string(const Term& t);

/// True when `name` can be printed as an unquoted TPTP lower word.
bool is_plain_functor(const std::string& name);

}  // namespace proofscope
