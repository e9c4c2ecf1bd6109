#include "proofscope/symbol.hpp"

#include <mutex>
#include <unordered_set>

namespace proofscope {

const std::string Symbol::kEmpty;

namespace {

struct InternPool {
  std::mutex mutex;
  // Node-based container: element addresses stay valid for the process lifetime.
  std::unordered_set<std::string> names;
};

InternPool& pool() {
  static InternPool instance;
  return instance;
}

}  // namespace

Symbol Symbol::intern(std::string_view name) {
  auto& p = pool();
  std::lock_guard lock(p.mutex);
  auto [it, inserted] = p.names.emplace(name);
  return Symbol(&*it);
}

Symbol equality_symbol() {
  static const Symbol eq = Symbol::intern("=");
  return eq;
}

}  // namespace proofscope
