#pragma once

#include <optional>

#include "quandles/quandle.hpp"

namespace quandles {

/// Full automorphism group, by backtracking with partial-image propagation
/// through the table.  Throws EnumerationBoundExceeded when the order
/// exceeds the search bound (the group of the trivial quandle is all of S_n).
PermGroup automorphism_group(const Quandle& q, int order_bound = 16);

/// A witness bijective homomorphism, or nothing.
std::optional<QuandleHom> are_isomorphic(const Quandle& q, const Quandle& r);

/// The lexicographically least table among all relabelings of q, found by
/// backtracking over label assignments with prefix pruning.  Two quandles
/// are isomorphic iff their canonical forms are equal tables.
Quandle canonical_form(const Quandle& q);

}  // namespace quandles
