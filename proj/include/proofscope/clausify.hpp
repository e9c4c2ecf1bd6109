#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "proofscope/formula.hpp"

namespace proofscope {

struct ClausifyOptions {
  /// Upper bound on the clauses produced from a single input formula.
  std::size_t max_clauses_per_formula = 10000;
};

struct InputClause {
  Clause clause;
  Role role = Role::axiom;
  std::string label;  // originating input label
};

struct ClausifiedProblem {
  std::vector<InputClause> clauses;
  SymbolTable symbols;  // includes Skolem symbols
  std::vector<std::string> skolem_symbols;
  bool equality_axioms = false;
};

class ClausifyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Clause form of the axioms together with the negated conjecture.
///
/// Pipeline per input: negate if conjecture, eliminate implications and
/// equivalences while pushing negations to atoms, Skolemize existentials over
/// all enclosing universals (symbols sk0, sk1, ... in input order), drop
/// universals and distribute disjunction over conjunction. Clauses keep the
/// originating label; conjecture clauses get role negated_conjecture. When
/// `=` occurs, equality axioms are appended with role axiom.
ClausifiedProblem clausify(const ProblemSpec& spec, const ClausifyOptions& options = {});

/// Clauses of a single closed formula. Skolem names are drawn from `symbols`
/// and `next_skolem`, both updated.
std::vector<Clause> clausify_formula(const FormulaPtr& f, SymbolTable& symbols, int& next_skolem,
                                     std::vector<std::string>& skolems, const ClausifyOptions& options = {});

/// Reflexivity, symmetry, transitivity and congruence clauses for `symbols`.
std::vector<InputClause> equality_axioms(const SymbolTable& symbols);

}  // namespace proofscope
