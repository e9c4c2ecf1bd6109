#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace proofscope {

/// Interned function or predicate name.
///
/// Symbols compare equal by identity and order lexicographically by name, so
/// they can be used both as hash keys and inside structural orderings.
class Symbol {
 public:
  Symbol() = default;

  static Symbol intern(std::string_view name);

  const std::string& name() const { return *name_; }

  friend bool operator==(Symbol a, Symbol b) { return a.name_ == b.name_; }
  friend std::strong_ordering operator<=>(Symbol a, Symbol b) {
    if (a.name_ == b.name_) return std::strong_ordering::equal;
    const int c = a.name_->compare(*b.name_);
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  std::size_t hash() const { return std::hash<const void*>{}(name_); }

 private:
  explicit Symbol(const std::string* name) : name_(name) {}

  static const std::string kEmpty;
  const std::string* name_ = &kEmpty;
};

/// The built-in equality predicate `=`.
Symbol equality_symbol();

}  // namespace proofscope

template <>
struct std::hash<proofscope::Symbol> {
  std::size_t operator()(proofscope::Symbol s) const noexcept { return s.hash(); }
};
