// Random generators and brute-force oracles shared by the test binaries.
// Nothing here calls into the inference kernel; the oracles evaluate
// clauses and formulas directly against finite interpretations.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "proofscope/clause.hpp"
#include "proofscope/formula.hpp"
#include "proofscope/term.hpp"

namespace proofscope::testing {

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

struct Sig {
  std::string name;
  std::size_t arity;
};

/// Random term of depth at most `depth` over `functions` and variables 0..vars-1.
inline TermPtr random_term(Rng& rng, const std::vector<Sig>& functions, int vars, int depth) {
  std::vector<Sig> leaves, inner;
  for (const auto& f : functions) (f.arity == 0 ? leaves : inner).push_back(f);
  const bool var_leaf = vars > 0 && (leaves.empty() || coin(rng, 0.5));
  if (depth <= 0 || inner.empty() || coin(rng, 0.45)) {
    if (var_leaf) return Term::variable(static_cast<int>(pick(rng, static_cast<std::size_t>(vars))));
    if (!leaves.empty()) return Term::application(Symbol::intern(leaves[pick(rng, leaves.size())].name));
  }
  const Sig& f = inner[pick(rng, inner.size())];
  std::vector<TermPtr> args;
  for (std::size_t i = 0; i < f.arity; ++i) args.push_back(random_term(rng, functions, vars, depth - 1));
  return Term::application(Symbol::intern(f.name), std::move(args));
}

inline Literal random_literal(Rng& rng, const std::vector<Sig>& predicates, const std::vector<Sig>& functions,
                              int vars, int depth) {
  const Sig& p = predicates[pick(rng, predicates.size())];
  std::vector<TermPtr> args;
  for (std::size_t i = 0; i < p.arity; ++i) args.push_back(random_term(rng, functions, vars, depth - 1));
  return {coin(rng), Term::application(Symbol::intern(p.name), std::move(args))};
}

inline Clause random_clause(Rng& rng, const std::vector<Sig>& predicates, const std::vector<Sig>& functions,
                            std::size_t max_literals, int vars, int depth) {
  std::vector<Literal> lits;
  const std::size_t n = 1 + pick(rng, max_literals);
  for (std::size_t i = 0; i < n; ++i) lits.push_back(random_literal(rng, predicates, functions, vars, depth));
  return Clause(std::move(lits));
}

/// Applies an arbitrary injective variable renaming.
inline TermPtr rename_term(const TermPtr& t, const std::map<int, int>& m) {
  if (t->is_variable()) return Term::variable(m.at(t->var()));
  std::vector<TermPtr> args;
  for (const auto& a : t->args()) args.push_back(rename_term(a, m));
  return Term::application(t->functor(), std::move(args));
}

inline Clause shuffle_and_rename(Rng& rng, const Clause& c) {
  std::vector<int> pool(40);
  std::iota(pool.begin(), pool.end(), 0);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::map<int, int> m;
  for (int v = 0; v <= c.max_var(); ++v) m[v] = pool[static_cast<std::size_t>(v)];
  std::vector<Literal> lits;
  for (const auto& l : c.literals()) lits.push_back({l.positive, rename_term(l.atom, m)});
  std::shuffle(lits.begin(), lits.end(), rng);
  return Clause(std::move(lits));
}

/// TPTP text of a random propositional formula over p0..p4.
inline std::string random_prop(Rng& rng, int depth) {
  if (depth == 0 || coin(rng, 0.25)) return "p" + std::to_string(pick(rng, 5));
  static const char* kOps[] = {" & ", " | ", " => ", " <=> ", " <~> ", " <= ", " ~| ", " ~& "};
  if (coin(rng, 0.2)) return "~ " + random_prop(rng, depth - 1);
  return "(" + random_prop(rng, depth - 1) + kOps[pick(rng, 8)] + random_prop(rng, depth - 1) + ")";
}

inline std::string random_term_text(Rng& rng, const std::vector<std::string>& vars) {
  if (vars.empty() || coin(rng, 0.3)) return "a";
  return vars[pick(rng, vars.size())];
}

/// TPTP text of a random first-order formula over p/1, q/1, r/2 and the
/// constant a, with at most three quantifiers.
inline std::string random_fo(Rng& rng, int depth, std::vector<std::string>& vars, int& quantifiers) {
  if (depth == 0 || coin(rng, 0.2)) {
    switch (pick(rng, 3)) {
      case 0: return "p(" + random_term_text(rng, vars) + ")";
      case 1: return "q(" + random_term_text(rng, vars) + ")";
      default: return "r(" + random_term_text(rng, vars) + ", " + random_term_text(rng, vars) + ")";
    }
  }
  const std::size_t choice = pick(rng, 6);
  if (choice <= 1 && quantifiers < 3) {
    ++quantifiers;
    const std::string v = "X" + std::to_string(vars.size());
    vars.push_back(v);
    const std::string body = random_fo(rng, depth - 1, vars, quantifiers);
    vars.pop_back();
    return std::string(choice == 0 ? "![" : "?[") + v + "]: " + body;
  }
  if (choice == 2) return "~ " + random_fo(rng, depth - 1, vars, quantifiers);
  static const char* kOps[] = {" & ", " | ", " => ", " <=> "};
  const std::string lhs = random_fo(rng, depth - 1, vars, quantifiers);
  return "(" + lhs + kOps[pick(rng, 4)] + random_fo(rng, depth - 1, vars, quantifiers) + ")";
}

// ---------------------------------------------------------------------------
// Finite interpretations.

/// Interpretation of a finite signature over the domain {0..n-1}. Tables are
/// indexed by the mixed-radix encoding of the argument tuple.
struct Interpretation {
  int n = 1;
  std::map<std::string, std::vector<int>> functions;
  std::map<std::string, std::vector<int>> predicates;  // 0/1

  static std::size_t index(const std::vector<int>& args, int n) {
    std::size_t i = 0;
    for (int a : args) i = i * static_cast<std::size_t>(n) + static_cast<std::size_t>(a);
    return i;
  }

  int eval(const Term& t, const std::vector<int>& env) const {
    if (t.is_variable()) return env.at(static_cast<std::size_t>(t.var()));
    std::vector<int> args;
    for (const auto& a : t.args()) args.push_back(eval(*a, env));
    return functions.at(t.functor().name()).at(index(args, n));
  }

  bool holds(const Term& atom, const std::vector<int>& env) const {
    if (atom.functor() == equality_symbol()) return eval(*atom.args()[0], env) == eval(*atom.args()[1], env);
    std::vector<int> args;
    for (const auto& a : atom.args()) args.push_back(eval(*a, env));
    return predicates.at(atom.functor().name()).at(index(args, n)) != 0;
  }

  bool satisfies(const Clause& c) const {
    const int vars = c.max_var() + 1;
    std::vector<int> env(static_cast<std::size_t>(std::max(vars, 0)), 0);
    while (true) {
      bool sat = false;
      for (const auto& l : c.literals()) {
        if (holds(*l.atom, env) == l.positive) {
          sat = true;
          break;
        }
      }
      if (!sat) return false;
      std::size_t k = 0;
      while (k < env.size() && ++env[k] == n) env[k++] = 0;
      if (k == env.size()) return true;
    }
  }

  bool satisfies(const std::vector<Clause>& cs) const {
    return std::all_of(cs.begin(), cs.end(), [&](const Clause& c) { return satisfies(c); });
  }

  bool satisfies(const Formula& f, std::map<int, int>& env) const {
    switch (f.kind()) {
      case Formula::Kind::atom: {
        int top = -1;
        for (const auto& [v, val] : env) top = std::max(top, v);
        std::vector<int> flat(static_cast<std::size_t>(top + 1), 0);
        for (const auto& [v, val] : env) flat[static_cast<std::size_t>(v)] = val;
        return holds(*f.atom(), flat);
      }
      case Formula::Kind::constant: return f.value();
      case Formula::Kind::negation: return !satisfies(*f.child(), env);
      case Formula::Kind::conjunction:
        for (const auto& c : f.children()) {
          if (!satisfies(*c, env)) return false;
        }
        return true;
      case Formula::Kind::disjunction:
        for (const auto& c : f.children()) {
          if (satisfies(*c, env)) return true;
        }
        return false;
      case Formula::Kind::implication: return !satisfies(*f.child(0), env) || satisfies(*f.child(1), env);
      case Formula::Kind::equivalence: return satisfies(*f.child(0), env) == satisfies(*f.child(1), env);
      case Formula::Kind::forall:
      case Formula::Kind::exists: {
        const bool universal = f.kind() == Formula::Kind::forall;
        const auto saved = env.find(f.var()) == env.end() ? std::optional<int>() : std::optional<int>(env[f.var()]);
        bool result = universal;
        for (int d = 0; d < n; ++d) {
          env[f.var()] = d;
          if (satisfies(*f.child(), env) != universal) {
            result = !universal;
            break;
          }
        }
        if (saved) {
          env[f.var()] = *saved;
        } else {
          env.erase(f.var());
        }
        return result;
      }
    }
    return false;
  }
};

/// Calls `visit` on every interpretation of `symbols` (name -> arity,
/// predicate flag) over a domain of size n until it returns true. Returns
/// whether some call returned true.
inline bool any_interpretation(const SymbolTable& symbols, int n,
                               const std::function<bool(const Interpretation&)>& visit) {
  Interpretation I;
  I.n = n;
  struct Slot {
    std::vector<int>* table;
    std::size_t index;
    int range;
  };
  std::vector<Slot> slots;
  for (const auto& [name, info] : symbols) {
    if (name == "=") continue;
    std::size_t size = 1;
    for (std::size_t i = 0; i < info.arity; ++i) size *= static_cast<std::size_t>(n);
    auto& table = info.predicate ? I.predicates[name] : I.functions[name];
    table.assign(size, 0);
  }
  for (auto& [name, table] : I.functions) {
    for (std::size_t i = 0; i < table.size(); ++i) slots.push_back({&table, i, n});
  }
  for (auto& [name, table] : I.predicates) {
    for (std::size_t i = 0; i < table.size(); ++i) slots.push_back({&table, i, 2});
  }
  while (true) {
    if (visit(I)) return true;
    std::size_t k = 0;
    while (k < slots.size() && ++(*slots[k].table)[slots[k].index] == slots[k].range) {
      (*slots[k].table)[slots[k].index] = 0;
      ++k;
    }
    if (k == slots.size()) return false;
  }
}

/// Number of interpretations `any_interpretation` would visit.
inline double interpretation_count(const SymbolTable& symbols, int n) {
  double total = 1;
  for (const auto& [name, info] : symbols) {
    if (name == "=") continue;
    double entries = 1;
    for (std::size_t i = 0; i < info.arity; ++i) entries *= n;
    total *= std::pow(info.predicate ? 2.0 : n, entries);
  }
  return total;
}

inline void collect_symbols(const Term& t, bool predicate, SymbolTable& out) {
  if (t.is_variable()) return;
  out[t.functor().name()] = {t.arity(), predicate};
  for (const auto& a : t.args()) collect_symbols(*a, false, out);
}

inline SymbolTable clause_symbols(const std::vector<Clause>& cs) {
  SymbolTable out;
  for (const auto& c : cs) {
    for (const auto& l : c.literals()) collect_symbols(*l.atom, true, out);
  }
  return out;
}

inline bool satisfiable_on(const std::vector<Clause>& cs, int n) {
  return any_interpretation(clause_symbols(cs), n, [&](const Interpretation& I) { return I.satisfies(cs); });
}

/// Satisfiability of a set of ground clauses by truth table over its atoms.
inline bool ground_satisfiable(const std::vector<Clause>& cs) {
  std::vector<std::string> atoms;
  std::map<std::string, std::size_t> index;
  for (const auto& c : cs) {
    for (const auto& l : c.literals()) {
      const std::string a = to_string(*l.atom);
      if (index.emplace(a, atoms.size()).second) atoms.push_back(a);
    }
  }
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << atoms.size()); ++m) {
    bool all = true;
    for (const auto& c : cs) {
      bool sat = false;
      for (const auto& l : c.literals()) {
        if ((((m >> index.at(to_string(*l.atom))) & 1) != 0) == l.positive) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Subsumption by exhaustive substitution enumeration.

inline void subterms(const TermPtr& t, std::vector<TermPtr>& out) {
  out.push_back(t);
  if (!t->is_variable()) {
    for (const auto& a : t->args()) subterms(a, out);
  }
}

inline TermPtr substitute(const TermPtr& t, const std::map<int, TermPtr>& s) {
  if (t->is_variable()) {
    const auto it = s.find(t->var());
    return it == s.end() ? t : it->second;
  }
  std::vector<TermPtr> args;
  for (const auto& a : t->args()) args.push_back(substitute(a, s));
  return Term::application(t->functor(), std::move(args));
}

/// c subsumes d iff some substitution over the subterms of d maps the
/// literals of c injectively onto literals of d. `d` must not share variables
/// with `c` in a way that matters: d's variables are treated as constants.
inline bool brute_force_subsumes(const Clause& c, const Clause& d) {
  if (c.size() > d.size()) return false;
  std::vector<TermPtr> candidates;
  for (const auto& l : d.literals()) subterms(l.atom, candidates);
  std::set<int> var_set;
  std::function<void(const Term&)> vars = [&](const Term& t) {
    if (t.is_variable()) {
      var_set.insert(t.var());
    } else {
      for (const auto& a : t.args()) vars(*a);
    }
  };
  for (const auto& l : c.literals()) vars(*l.atom);
  const std::vector<int> cv(var_set.begin(), var_set.end());
  std::vector<std::size_t> choice(cv.size(), 0);
  while (true) {
    std::map<int, TermPtr> s;
    for (std::size_t i = 0; i < cv.size(); ++i) s[cv[i]] = candidates[choice[i]];
    // Injective assignment of c's literals to equal literals of d.
    std::vector<std::size_t> perm(d.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Literal> image;
    for (const auto& l : c.literals()) image.push_back({l.positive, substitute(l.atom, s)});
    do {
      bool ok = true;
      for (std::size_t i = 0; i < image.size() && ok; ++i) {
        const Literal& t = d[perm[i]];
        ok = t.positive == image[i].positive && terms_equal(*t.atom, *image[i].atom);
      }
      if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == candidates.size()) choice[k++] = 0;
    if (k == choice.size()) return false;
  }
}

}  // namespace proofscope::testing
