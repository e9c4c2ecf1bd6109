#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "proofscope/clause.hpp"

namespace proofscope {

/// Finite map from variable ids to terms. Substitutions returned by `unify`
/// are idempotent: no bound variable occurs in any binding.
class Substitution {
 public:
  Substitution() = default;

  void bind(int var, TermPtr t) { bindings_[var] = std::move(t); }
  const Term* lookup(int var) const;
  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }
  const std::map<int, TermPtr>& bindings() const { return bindings_; }

  /// Applies bindings recursively until no bound variable remains.
  TermPtr apply(const TermPtr& t) const;
  Literal apply(const Literal& l) const { return {l.positive, apply(l.atom)}; }
  Clause apply(const Clause& c) const;

  bool is_idempotent() const;

 private:
  std::map<int, TermPtr> bindings_;
};

/// Most general unifier, or nullopt on symbol clash or occurs-check failure.
std::optional<Substitution> unify(const TermPtr& a, const TermPtr& b);

/// One-way matching state: binds pattern variables only; target variables
/// are treated as rigid constants. Bindings can be rolled back with `undo`.
class Matcher {
 public:
  bool match(const Term& pattern, const TermPtr& target);
  bool match(const Literal& pattern, const Literal& target);

  std::size_t mark() const { return trail_.size(); }
  void undo(std::size_t mark);

 private:
  const TermPtr* find(int var) const;

  std::vector<std::pair<int, TermPtr>> trail_;
};

}  // namespace proofscope
