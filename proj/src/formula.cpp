#include "proofscope/formula.hpp"

#include <algorithm>

namespace proofscope {

FormulaPtr Formula::atom(TermPtr atom) {
  return std::make_shared<const Formula>(Kind::atom, std::move(atom), false, -1, std::vector<FormulaPtr>{});
}
FormulaPtr Formula::constant(bool value) {
  return std::make_shared<const Formula>(Kind::constant, nullptr, value, -1, std::vector<FormulaPtr>{});
}
FormulaPtr Formula::negation(FormulaPtr f) {
  return std::make_shared<const Formula>(Kind::negation, nullptr, false, -1, std::vector<FormulaPtr>{std::move(f)});
}
FormulaPtr Formula::conjunction(std::vector<FormulaPtr> fs) {
  return std::make_shared<const Formula>(Kind::conjunction, nullptr, false, -1, std::move(fs));
}
FormulaPtr Formula::disjunction(std::vector<FormulaPtr> fs) {
  return std::make_shared<const Formula>(Kind::disjunction, nullptr, false, -1, std::move(fs));
}
FormulaPtr Formula::implication(FormulaPtr lhs, FormulaPtr rhs) {
  return std::make_shared<const Formula>(Kind::implication, nullptr, false, -1,
                                         std::vector<FormulaPtr>{std::move(lhs), std::move(rhs)});
}
FormulaPtr Formula::equivalence(FormulaPtr lhs, FormulaPtr rhs) {
  return std::make_shared<const Formula>(Kind::equivalence, nullptr, false, -1,
                                         std::vector<FormulaPtr>{std::move(lhs), std::move(rhs)});
}
FormulaPtr Formula::forall(int var, FormulaPtr body) {
  return std::make_shared<const Formula>(Kind::forall, nullptr, false, var, std::vector<FormulaPtr>{std::move(body)});
}
FormulaPtr Formula::exists(int var, FormulaPtr body) {
  return std::make_shared<const Formula>(Kind::exists, nullptr, false, var, std::vector<FormulaPtr>{std::move(body)});
}

namespace {

void collect_vars(const Term& t, std::vector<int>& out) {
  if (t.is_variable()) {
    if (std::find(out.begin(), out.end(), t.var()) == out.end()) out.push_back(t.var());
    return;
  }
  for (const auto& a : t.args()) collect_vars(*a, out);
}

std::string var_name(int id, const std::map<int, std::string>& names) {
  auto it = names.find(id);
  return it != names.end() ? it->second : "V" + std::to_string(id);
}

std::string term_tptp(const Term& t, const std::map<int, std::string>& names) {
  if (t.is_variable()) return var_name(t.var(), names);
  std::string out;
  const std::string& f = t.functor().name();
  if (is_plain_functor(f)) {
    out = f;
  } else {
    out = "'";
    for (char c : f) {
      if (c == '\'' || c == '\\') out += '\\';
      out += c;
    }
    out += "'";
  }
  if (t.arity() == 0) return out;
  out += '(';
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i) out += ',';
    out += term_tptp(*t.args()[i], names);
  }
  return out + ')';
}

std::string atom_tptp(const Term& a, const std::map<int, std::string>& names) {
  if (a.functor() == equality_symbol() && a.arity() == 2) {
    return term_tptp(*a.args()[0], names) + " = " + term_tptp(*a.args()[1], names);
  }
  return term_tptp(a, names);
}

std::string join(const Formula& f, const char* op, const std::map<int, std::string>& names) {
  std::string out = "(";
  for (std::size_t i = 0; i < f.children().size(); ++i) {
    if (i) out += op;
    out += to_tptp(*f.child(i), names);
  }
  return out + ")";
}

}  // namespace

FormulaPtr clause_formula(const Clause& c) {
  std::vector<FormulaPtr> lits;
  std::vector<int> vars;
  for (const auto& l : c.literals()) {
    collect_vars(*l.atom, vars);
    auto a = Formula::atom(l.atom);
    lits.push_back(l.positive ? a : Formula::negation(a));
  }
  FormulaPtr body = lits.empty() ? Formula::constant(false)
                    : lits.size() == 1 ? lits.front()
                                       : Formula::disjunction(std::move(lits));
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = Formula::forall(*it, body);
  return body;
}

std::string to_tptp(const Formula& f, const std::map<int, std::string>& names) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::atom:
      return atom_tptp(*f.atom(), names);
    case K::constant:
      return f.value() ? "$true" : "$false";
    case K::negation: {
      const Formula& c = *f.child();
      if (c.kind() == K::atom && c.atom()->functor() == equality_symbol() && c.atom()->arity() == 2) {
        return term_tptp(*c.atom()->args()[0], names) + " != " + term_tptp(*c.atom()->args()[1], names);
      }
      return "~ " + to_tptp(c, names);
    }
    case K::conjunction:
      return join(f, " & ", names);
    case K::disjunction:
      return join(f, " | ", names);
    case K::implication:
      return join(f, " => ", names);
    case K::equivalence:
      return join(f, " <=> ", names);
    case K::forall:
    case K::exists: {
      std::string out = f.kind() == K::forall ? "! [" : "? [";
      out += var_name(f.var(), names);
      return out + "] : " + to_tptp(*f.child(), names);
    }
  }
  return {};
}

std::string to_string(Role r) {
  switch (r) {
    case Role::axiom: return "axiom";
    case Role::hypothesis: return "hypothesis";
    case Role::negated_conjecture: return "negated_conjecture";
    case Role::conjecture: return "conjecture";
  }
  return "axiom";
}

std::optional<Role> parse_role(const std::string& s) {
  if (s == "axiom") return Role::axiom;
  if (s == "hypothesis") return Role::hypothesis;
  if (s == "negated_conjecture") return Role::negated_conjecture;
  if (s == "conjecture") return Role::conjecture;
  return std::nullopt;
}

const AnnotatedInput* ProblemSpec::find(const std::string& label) const {
  for (const auto& in : inputs) {
    if (in.label == label) return &in;
  }
  return nullptr;
}

bool ProblemSpec::has_conjecture() const {
  return std::any_of(inputs.begin(), inputs.end(),
                     [](const AnnotatedInput& in) { return in.role == Role::conjecture; });
}

namespace {
std::string located(const std::string& file, int line, int column, const std::string& message) {
  std::string where = file.empty() ? "<input>" : file;
  return where + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}
}  // namespace

ParseError::ParseError(const std::string& file, int line, int column, const std::string& message)
    : std::runtime_error(located(file, line, column, message)), line_(line), column_(column) {}

std::optional<std::string> declare_symbol(SymbolTable& table, const std::string& name,
                                          std::size_t arity, bool predicate) {
  auto [it, inserted] = table.emplace(name, SymbolInfo{arity, predicate});
  if (inserted) return std::nullopt;
  const SymbolInfo& prev = it->second;
  if (prev.predicate != predicate) {
    return "symbol '" + name + "' used both as " + (prev.predicate ? "predicate" : "function") +
           " and as " + (predicate ? "predicate" : "function");
  }
  if (prev.arity != arity) {
    return "arity clash for '" + name + "': " + std::to_string(prev.arity) + " vs " + std::to_string(arity);
  }
  return std::nullopt;
}

}  // namespace proofscope
