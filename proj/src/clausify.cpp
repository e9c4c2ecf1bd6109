#include "proofscope/clausify.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>


namespace proofscope {

namespace {

using K = Formula::Kind;

// Negation normal form; implications and equivalences are expanded.
FormulaPtr nnf(const FormulaPtr& f, bool negate) {
  switch (f->kind()) {
    case K::atom:
      return negate ? Formula::negation(f) : f;
    case K::constant:
      return Formula::constant(f->value() != negate);
    case K::negation:
      return nnf(f->child(), !negate);
    case K::conjunction:
    case K::disjunction: {
      std::vector<FormulaPtr> parts;
      for (const auto& c : f->children()) parts.push_back(nnf(c, negate));
      const bool conj = (f->kind() == K::conjunction) != negate;
      return conj ? Formula::conjunction(std::move(parts)) : Formula::disjunction(std::move(parts));
    }
    case K::implication: {
      const FormulaPtr& a = f->child(0);
      const FormulaPtr& b = f->child(1);
      if (negate) return Formula::conjunction({nnf(a, false), nnf(b, true)});
      return Formula::disjunction({nnf(a, true), nnf(b, false)});
    }
    case K::equivalence: {
      const FormulaPtr& a = f->child(0);
      const FormulaPtr& b = f->child(1);
      if (negate) {
        return Formula::conjunction({Formula::disjunction({nnf(a, false), nnf(b, false)}),
                                     Formula::disjunction({nnf(a, true), nnf(b, true)})});
      }
      return Formula::conjunction({Formula::disjunction({nnf(a, true), nnf(b, false)}),
                                   Formula::disjunction({nnf(a, false), nnf(b, true)})});
    }
    case K::forall:
    case K::exists: {
      const bool universal = (f->kind() == K::forall) != negate;
      FormulaPtr body = nnf(f->child(), negate);
      return universal ? Formula::forall(f->var(), body) : Formula::exists(f->var(), body);
    }
  }
  return f;
}

class Skolemizer {
 public:
  Skolemizer(SymbolTable& symbols, int& next_skolem, std::vector<std::string>& skolems)
      : symbols_(symbols), next_skolem_(next_skolem), skolems_(skolems) {}

  // Returns a quantifier-free NNF formula.
  FormulaPtr run(const FormulaPtr& f) {
    switch (f->kind()) {
      case K::atom:
        return Formula::atom(replace(f->atom()));
      case K::constant:
        return f;
      case K::negation:
        return Formula::negation(run(f->child()));
      case K::conjunction:
      case K::disjunction: {
        std::vector<FormulaPtr> parts;
        for (const auto& c : f->children()) parts.push_back(run(c));
        return f->kind() == K::conjunction ? Formula::conjunction(std::move(parts))
                                           : Formula::disjunction(std::move(parts));
      }
      case K::forall: {
        // Fresh id per binder occurrence: equivalence expansion duplicates binders.
        const int fresh = next_var_++;
        auto saved = subst_;
        subst_[f->var()] = Term::variable(fresh);
        universals_.push_back(fresh);
        FormulaPtr body = run(f->child());
        universals_.pop_back();
        subst_ = std::move(saved);
        return body;
      }
      case K::exists: {
        std::vector<TermPtr> args;
        for (int u : universals_) args.push_back(Term::variable(u));
        const std::string name = fresh_name(args.size());
        auto saved = subst_;
        subst_[f->var()] = Term::application(Symbol::intern(name), std::move(args));
        FormulaPtr body = run(f->child());
        subst_ = std::move(saved);
        return body;
      }
      case K::implication:
      case K::equivalence:
        break;
    }
    throw ClausifyError("internal: formula not in negation normal form");
  }

 private:
  // Single pass: bound ids and the fresh ids in the replacements are
  // separate namespaces, so the result is never substituted again.
  TermPtr replace(const TermPtr& t) const {
    if (t->ground()) return t;
    if (t->is_variable()) {
      const auto it = subst_.find(t->var());
      return it == subst_.end() ? t : it->second;
    }
    std::vector<TermPtr> args;
    args.reserve(t->arity());
    for (const auto& a : t->args()) args.push_back(replace(a));
    return Term::application(t->functor(), std::move(args));
  }

  std::string fresh_name(std::size_t arity) {
    for (;;) {
      std::string name = "sk" + std::to_string(next_skolem_++);
      if (symbols_.count(name)) continue;
      symbols_.emplace(name, SymbolInfo{arity, false});
      skolems_.push_back(name);
      return name;
    }
  }

  SymbolTable& symbols_;
  int& next_skolem_;
  std::vector<std::string>& skolems_;
  std::map<int, TermPtr> subst_;
  std::vector<int> universals_;
  int next_var_ = 0;
};

using ClauseSet = std::vector<std::vector<Literal>>;

ClauseSet to_cnf(const FormulaPtr& f, std::size_t bound) {
  switch (f->kind()) {
    case K::atom:
      return {{Literal{true, f->atom()}}};
    case K::negation:
      return {{Literal{false, f->child()->atom()}}};
    case K::constant:
      if (f->value()) return {};
      return {{}};
    case K::conjunction: {
      ClauseSet out;
      for (const auto& c : f->children()) {
        ClauseSet part = to_cnf(c, bound);
        out.insert(out.end(), part.begin(), part.end());
        if (out.size() > bound) throw ClausifyError("clause form exceeds " + std::to_string(bound) + " clauses");
      }
      return out;
    }
    case K::disjunction: {
      ClauseSet out{{}};
      for (const auto& c : f->children()) {
        ClauseSet part = to_cnf(c, bound);
        if (part.size() * out.size() > bound) {
          throw ClausifyError("clause form exceeds " + std::to_string(bound) + " clauses");
        }
        ClauseSet next;
        next.reserve(out.size() * part.size());
        for (const auto& a : out) {
          for (const auto& b : part) {
            std::vector<Literal> merged = a;
            merged.insert(merged.end(), b.begin(), b.end());
            next.push_back(std::move(merged));
          }
        }
        out = std::move(next);
      }
      return out;
    }
    default:
      break;
  }
  throw ClausifyError("internal: unexpected connective in clause form");
}

TermPtr renumber(const TermPtr& t, std::unordered_map<int, int>& map) {
  if (t->ground()) return t;
  if (t->is_variable()) {
    auto [it, inserted] = map.emplace(t->var(), static_cast<int>(map.size()));
    return Term::variable(it->second);
  }
  std::vector<TermPtr> args;
  args.reserve(t->arity());
  for (const auto& a : t->args()) args.push_back(renumber(a, map));
  return Term::application(t->functor(), std::move(args));
}

// Renumbers variables 0, 1, ... by first occurrence.
Clause normalize_vars(const Clause& c) {
  std::unordered_map<int, int> map;
  std::vector<Literal> lits;
  lits.reserve(c.size());
  for (const auto& l : c.literals()) lits.push_back({l.positive, renumber(l.atom, map)});
  return Clause(std::move(lits));
}

TermPtr var(int i) { return Term::variable(i); }

}  // namespace

std::vector<Clause> clausify_formula(const FormulaPtr& f, SymbolTable& symbols, int& next_skolem,
                                     std::vector<std::string>& skolems, const ClausifyOptions& options) {
  Skolemizer sk(symbols, next_skolem, skolems);
  FormulaPtr matrix = sk.run(nnf(f, false));
  std::vector<Clause> out;
  for (auto& lits : to_cnf(matrix, options.max_clauses_per_formula)) {
    out.push_back(normalize_vars(remove_duplicate_literals(Clause(std::move(lits)))));
  }
  return out;
}

std::vector<InputClause> equality_axioms(const SymbolTable& symbols) {
  const Symbol eq = equality_symbol();
  auto equal = [&](TermPtr a, TermPtr b, bool positive) {
    return Literal{positive, Term::application(eq, {std::move(a), std::move(b)})};
  };
  std::vector<InputClause> out;
  out.push_back({Clause({equal(var(0), var(0), true)}), Role::axiom, "eq_reflexivity"});
  out.push_back({Clause({equal(var(0), var(1), false), equal(var(1), var(0), true)}), Role::axiom, "eq_symmetry"});
  out.push_back({Clause({equal(var(0), var(1), false), equal(var(1), var(2), false), equal(var(0), var(2), true)}),
                 Role::axiom, "eq_transitivity"});
  for (const auto& [name, info] : symbols) {
    if (name == "=" || info.arity == 0) continue;
    const Symbol sym = Symbol::intern(name);
    for (std::size_t i = 0; i < info.arity; ++i) {
      std::vector<TermPtr> lhs, rhs;
      int next = 2;
      for (std::size_t k = 0; k < info.arity; ++k) {
        if (k == i) {
          lhs.push_back(var(0));
          rhs.push_back(var(1));
        } else {
          lhs.push_back(var(next));
          rhs.push_back(var(next));
          ++next;
        }
      }
      TermPtr l = Term::application(sym, std::move(lhs));
      TermPtr r = Term::application(sym, std::move(rhs));
      std::vector<Literal> lits{equal(var(0), var(1), false)};
      if (info.predicate) {
        lits.push_back({false, l});
        lits.push_back({true, r});
      } else {
        lits.push_back(equal(l, r, true));
      }
      out.push_back({Clause(std::move(lits)), Role::axiom, "eq_congruence_" + name + "_" + std::to_string(i + 1)});
    }
  }
  return out;
}

ClausifiedProblem clausify(const ProblemSpec& spec, const ClausifyOptions& options) {
  ClausifiedProblem out;
  out.symbols = spec.symbols;
  int next_skolem = 0;
  for (const auto& in : spec.inputs) {
    const bool conjecture = in.role == Role::conjecture;
    const Role role = conjecture ? Role::negated_conjecture : in.role;
    if (in.is_cnf && !conjecture) {
      out.clauses.push_back({normalize_vars(remove_duplicate_literals(*in.clause)), role, in.label});
      continue;
    }
    FormulaPtr f = conjecture ? Formula::negation(in.formula) : in.formula;
    for (auto& c : clausify_formula(f, out.symbols, next_skolem, out.skolem_symbols, options)) {
      out.clauses.push_back({std::move(c), role, in.label});
    }
  }
  if (out.symbols.count("=")) {
    out.equality_axioms = true;
    for (auto& ax : equality_axioms(out.symbols)) out.clauses.push_back(std::move(ax));
  }
  return out;
}

}  // namespace proofscope
