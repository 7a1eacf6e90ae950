#pragma once

// The order <_0 on worms (A <_0 B iff GLP proves B -> <0>A) and its
// isomorphism with epsilon_0.
//
// The ordinal assignment o splits a worm at its leftmost 0,
//   o(T) = 0,
//   o(H) = w^o(H-)            for H nonempty and 0-free,
//   o(H <0> B) = o(B) + w^o(H-)  for H the maximal 0-free prefix,
// where H- is H with every index decreased by one. All operations here
// require natural indices and throw DomainError otherwise.

#include <cstdint>
#include <span>

#include "glp/formula.hpp"
#include "glp/ordinal.hpp"

namespace glp {

/// Decreases every index by one. Throws DomainError on an index 0.
Worm demote(const Worm& w);
/// Increases every index by one.
Worm promote(const Worm& w);

CnfOrdinal worm_ordinal(const Worm& w);

/// The canonical worm with the given ordinal: the inverse of worm_ordinal on
/// its image.
Worm worm_of_ordinal(const CnfOrdinal& a);

/// Compares o(a) with o(b). EQ means <_0-equivalence, not identity.
Cmp worm_cmp(const Worm& a, const Worm& b);

/// Same result as worm_cmp, computed by recursion on the 0-split of each
/// worm without building ordinals.
Cmp worm_cmp_structural(const Worm& a, const Worm& b);

namespace detail {
/// o of a worm whose indices are all >= level, read with `level` as 0.
CnfOrdinal worm_ordinal_at(std::span<const std::uint64_t> w, std::uint64_t level);
Cmp worm_cmp_structural_at(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                           std::uint64_t level);
}  // namespace detail

}  // namespace glp
