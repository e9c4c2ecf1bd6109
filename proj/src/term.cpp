#include "proofscope/term.hpp"

#include <algorithm>
#include <cctype>

namespace proofscope {

Term::Term(Kind kind, int var, Symbol functor, std::vector<TermPtr> args)
    : kind_(kind), var_(var), functor_(functor), args_(std::move(args)) {
  if (kind_ == Kind::variable) {
    ground_ = false;
    max_var_ = var_;
    return;
  }
  for (const auto& a : args_) {
    weight_ += a->weight();
    ground_ = ground_ && a->ground();
    max_var_ = std::max(max_var_, a->max_var());
  }
}

TermPtr Term::variable(int id) {
  return std::make_shared<const Term>(Kind::variable, id, Symbol{}, std::vector<TermPtr>{});
}

TermPtr Term::application(Symbol functor, std::vector<TermPtr> args) {
  return std::make_shared<const Term>(Kind::application, -1, functor, std::move(args));
}

std::strong_ordering compare_terms(const Term& a, const Term& b) {
  if (&a == &b) return std::strong_ordering::equal;
  if (a.is_variable() != b.is_variable()) {
    return a.is_variable() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a.is_variable()) return a.var() <=> b.var();
  if (auto c = a.functor() <=> b.functor(); c != 0) return c;
  if (auto c = a.arity() <=> b.arity(); c != 0) return c;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (auto c = compare_terms(*a.args()[i], *b.args()[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool terms_equal(const Term& a, const Term& b) {
  if (&a == &b) return true;
  if (a.weight() != b.weight()) return false;
  return compare_terms(a, b) == 0;
}

bool occurs_in(int var, const Term& t) {
  if (t.is_variable()) return t.var() == var;
  if (t.max_var() < var) return false;
  return std::any_of(t.args().begin(), t.args().end(),
                     [var](const TermPtr& a) { return occurs_in(var, *a); });
}

TermPtr shift_vars(const TermPtr& t, int offset) {
  if (offset == 0 || t->ground()) return t;
  if (t->is_variable()) return Term::variable(t->var() + offset);
  std::vector<TermPtr> args;
  args.reserve(t->arity());
  for (const auto& a : t->args()) args.push_back(shift_vars(a, offset));
  return Term::application(t->functor(), std::move(args));
}

bool is_plain_functor(const std::string& name) {
  if (name.empty()) return false;
  if (name[0] == '$') {
    return std::all_of(name.begin() + 1, name.end(),
                       [](unsigned char c) { return std::isalnum(c) || c == '_'; });
  }
  if (!std::islower(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(),
                     [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

namespace {

void append_functor(std::string& out, const std::string& name) {
  if (is_plain_functor(name)) {
    out += name;
    return;
  }
  out += '\'';
  for (char c : name) {
    if (c == '\'' || c == '\\') out += '\\';
    out += c;
  }
  out += '\'';
}

void append_term(std::string& out, const Term& t) {
  if (t.is_variable()) {
    out += 'V';
    out += std::to_string(t.var());
    return;
  }
  if (t.functor() == equality_symbol() && t.arity() == 2) {
    append_term(out, *t.args()[0]);
    out += " = ";
    append_term(out, *t.args()[1]);
    return;
  }
  append_functor(out, t.functor().name());
  if (t.arity() == 0) return;
  out += '(';
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i) out += ',';
    append_term(out, *t.args()[i]);
  }
  out += ')';
}

}  // namespace

std::string to_string(const Term& t) {
  std::string out;
  append_term(out, t);
  return out;
}

}  // namespace proofscope
