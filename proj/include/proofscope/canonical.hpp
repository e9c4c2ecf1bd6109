#pragma once

#include <string>

#include "proofscope/clause.hpp"

namespace proofscope {

/// Normal form under literal permutation, variable renaming and literal
/// duplication.
///
/// Literals are ordered first by a variable-blind key (polarity, predicate
/// name, argument structure with every variable treated alike). Literals that
/// tie on that key are ordered so that the whole literal sequence, with
/// variables numbered by first occurrence, is lexicographically least under
/// `compare_literals`. Variables are then renamed V0, V1, ... in first
/// occurrence order. The result is idempotent.
Clause canonical_clause(const Clause& c);

/// Printed canonical form; equal keys iff the clauses are variants.
std::string canonical_key(const Clause& c);

}  // namespace proofscope
