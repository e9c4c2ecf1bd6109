#pragma once

#include <optional>
#include <vector>

#include "proofscope/clause.hpp"

namespace proofscope {

/// Shifts the variables of `c2` so that they are disjoint from those of `c1`.
Clause rename_apart(const Clause& c1, const Clause& c2);

/// Binary resolution on literal `i` of `c1` and literal `j` of `c2`.
/// The clauses must be renamed apart. Returns ((c1 - l_i) + (c2 - l_j))σ with
/// repeated literals removed, or nullopt when the literals are not
/// complementary-unifiable.
std::optional<Clause> resolve(const Clause& c1, std::size_t i, const Clause& c2, std::size_t j);

/// One factor per unifiable same-polarity literal pair, in pair order.
std::vector<Clause> factor(const Clause& c);

/// Multiset subsumption: some σ maps the literals of `c` injectively onto
/// literals of `d`.
bool subsumes(const Clause& c, const Clause& d);

/// Contains a literal and its syntactic complement.
bool is_tautology(const Clause& c);

}  // namespace proofscope
