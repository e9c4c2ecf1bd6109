#include "proofscope/unify.hpp"

#include <unordered_map>

namespace proofscope {

const Term* Substitution::lookup(int var) const {
  auto it = bindings_.find(var);
  return it == bindings_.end() ? nullptr : it->second.get();
}

TermPtr Substitution::apply(const TermPtr& t) const {
  if (bindings_.empty() || t->ground()) return t;
  if (t->is_variable()) {
    auto it = bindings_.find(t->var());
    if (it == bindings_.end()) return t;
    return apply(it->second);
  }
  std::vector<TermPtr> args;
  args.reserve(t->arity());
  bool changed = false;
  for (const auto& a : t->args()) {
    args.push_back(apply(a));
    changed = changed || args.back() != a;
  }
  if (!changed) return t;
  return Term::application(t->functor(), std::move(args));
}

Clause Substitution::apply(const Clause& c) const {
  std::vector<Literal> lits;
  lits.reserve(c.size());
  for (const auto& l : c.literals()) lits.push_back(apply(l));
  return Clause(std::move(lits));
}

bool Substitution::is_idempotent() const {
  for (const auto& [var, t] : bindings_) {
    for (const auto& [other, unused] : bindings_) {
      if (occurs_in(other, *t)) return false;
    }
  }
  return true;
}

namespace {

// Triangular bindings during unification; resolved to idempotent form at the end.
class Unifier {
 public:
  bool unify(const TermPtr& a, const TermPtr& b) {
    std::vector<std::pair<TermPtr, TermPtr>> work{{a, b}};
    while (!work.empty()) {
      auto [s, t] = work.back();
      work.pop_back();
      s = walk(s);
      t = walk(t);
      if (s == t) continue;
      if (s->is_variable() && t->is_variable() && s->var() == t->var()) continue;
      if (s->is_variable()) {
        if (occurs(s->var(), t)) return false;
        bindings_[s->var()] = t;
        continue;
      }
      if (t->is_variable()) {
        if (occurs(t->var(), s)) return false;
        bindings_[t->var()] = s;
        continue;
      }
      if (s->functor() != t->functor() || s->arity() != t->arity()) return false;
      for (std::size_t i = s->arity(); i-- > 0;) work.emplace_back(s->args()[i], t->args()[i]);
    }
    return true;
  }

  Substitution result() const {
    Substitution tri;
    for (const auto& [v, t] : bindings_) tri.bind(v, t);
    Substitution out;
    for (const auto& [v, t] : bindings_) out.bind(v, tri.apply(t));
    return out;
  }

 private:
  TermPtr walk(TermPtr t) const {
    while (t->is_variable()) {
      auto it = bindings_.find(t->var());
      if (it == bindings_.end()) break;
      t = it->second;
    }
    return t;
  }

  bool occurs(int var, const TermPtr& t) const {
    const TermPtr w = walk(t);
    if (w->is_variable()) return w->var() == var;
    if (w->ground()) return false;
    for (const auto& a : w->args()) {
      if (occurs(var, a)) return true;
    }
    return false;
  }

  std::unordered_map<int, TermPtr> bindings_;
};

}  // namespace

std::optional<Substitution> unify(const TermPtr& a, const TermPtr& b) {
  Unifier u;
  if (!u.unify(a, b)) return std::nullopt;
  return u.result();
}

const TermPtr* Matcher::find(int var) const {
  for (auto it = trail_.rbegin(); it != trail_.rend(); ++it) {
    if (it->first == var) return &it->second;
  }
  return nullptr;
}

bool Matcher::match(const Term& pattern, const TermPtr& target) {
  if (pattern.is_variable()) {
    if (const TermPtr* bound = find(pattern.var())) return terms_equal(**bound, *target);
    trail_.emplace_back(pattern.var(), target);
    return true;
  }
  if (target->is_variable()) return false;
  if (pattern.functor() != target->functor() || pattern.arity() != target->arity()) return false;
  if (pattern.ground()) return terms_equal(pattern, *target);
  for (std::size_t i = 0; i < pattern.arity(); ++i) {
    if (!match(*pattern.args()[i], target->args()[i])) return false;
  }
  return true;
}

bool Matcher::match(const Literal& pattern, const Literal& target) {
  if (pattern.positive != target.positive) return false;
  const std::size_t m = mark();
  if (match(*pattern.atom, target.atom)) return true;
  undo(m);
  return false;
}

void Matcher::undo(std::size_t mark) { trail_.resize(mark); }

}  // namespace proofscope
