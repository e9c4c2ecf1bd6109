#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "proofscope/clause.hpp"

namespace proofscope {

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// First-order formula over the problem signature. Bound variables carry
/// problem-wide unique ids, so substitution never captures.
class Formula {
 public:
  enum class Kind { atom, constant, negation, conjunction, disjunction, implication, equivalence, forall, exists };

  static FormulaPtr atom(TermPtr atom);
  static FormulaPtr constant(bool value);
  static FormulaPtr negation(FormulaPtr f);
  static FormulaPtr conjunction(std::vector<FormulaPtr> fs);
  static FormulaPtr disjunction(std::vector<FormulaPtr> fs);
  static FormulaPtr implication(FormulaPtr lhs, FormulaPtr rhs);
  static FormulaPtr equivalence(FormulaPtr lhs, FormulaPtr rhs);
  static FormulaPtr forall(int var, FormulaPtr body);
  static FormulaPtr exists(int var, FormulaPtr body);

  Kind kind() const { return kind_; }
  const TermPtr& atom() const { return atom_; }
  bool value() const { return value_; }
  int var() const { return var_; }
  const std::vector<FormulaPtr>& children() const { return children_; }
  const FormulaPtr& child(std::size_t i = 0) const { return children_[i]; }

  Formula(Kind kind, TermPtr atom, bool value, int var, std::vector<FormulaPtr> children)
      : kind_(kind), atom_(std::move(atom)), value_(value), var_(var), children_(std::move(children)) {}

 private:
  Kind kind_;
  TermPtr atom_;
  bool value_ = false;
  int var_ = -1;
  std::vector<FormulaPtr> children_;
};

/// Universal closure of a clause, with the clause's own variable ids.
FormulaPtr clause_formula(const Clause& c);

/// TPTP FOF text. `names` maps variable ids to source names; unnamed
/// variables print as V<id>.
std::string to_tptp(const Formula& f, const std::map<int, std::string>& names = {});

enum class Role { axiom, hypothesis, negated_conjecture, conjecture };

std::string to_string(Role r);
std::optional<Role> parse_role(const std::string& s);

struct SymbolInfo {
  std::size_t arity = 0;
  bool predicate = false;
};

/// Name -> arity/kind for every function and predicate symbol.
using SymbolTable = std::map<std::string, SymbolInfo>;

/// One annotated input. CNF inputs keep their clause; FOF inputs keep a formula.
struct AnnotatedInput {
  std::string label;
  Role role = Role::axiom;
  bool is_cnf = false;
  std::optional<Clause> clause;
  FormulaPtr formula;
  std::map<int, std::string> var_names;
  std::string source_file;
  int line = 0;
};

struct ProblemSpec {
  std::string name;
  std::vector<AnnotatedInput> inputs;
  SymbolTable symbols;

  const AnnotatedInput* find(const std::string& label) const;
  bool has_conjecture() const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& file, int line, int column, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Records the arity of `name`; returns a message on a clash with an earlier use.
std::optional<std::string> declare_symbol(SymbolTable& table, const std::string& name,
                                          std::size_t arity, bool predicate);

}  // namespace proofscope
