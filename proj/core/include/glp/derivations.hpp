#pragma once

// Proof generators for the closed fragment.

#include <cstdint>
#include <optional>

#include "glp/formula.hpp"
#include "glp/proof.hpp"

namespace glp {

/// A proof of <alpha+1>phi -> Q^k_alpha(phi).
Proof derive_inclusion(const ModalIndex& alpha, std::uint64_t k, const Formula& phi);

/// A proof of <alpha+1>phi -> <landing>Q^k_alpha(phi), for landing <= alpha.
/// Throws DomainError otherwise.
Proof derive_inclusion_dia(const ModalIndex& alpha, std::uint64_t k, const Formula& phi,
                           const ModalIndex& landing);
inline Proof derive_inclusion_dia(const ModalIndex& alpha, std::uint64_t k, const Formula& phi) {
  return derive_inclusion_dia(alpha, k, phi, alpha);
}

/// Searches for a proof of b -> <0>a. `depth` bounds the nesting of the
/// search; nullopt says nothing about the order of a and b.
std::optional<Proof> certify_less(const Worm& a, const Worm& b, std::uint64_t depth);

inline constexpr std::uint64_t kDefaultSearchDepth = 32;

}  // namespace glp
