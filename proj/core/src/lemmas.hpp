#pragma once

// Derived GLP rules on top of ProofBuilder. Every function appends the lines
// it needs and returns the line holding the stated formula.

#include <cstdint>
#include <optional>
#include <vector>

#include "glp/formula.hpp"
#include "glp/proof_builder.hpp"

namespace glp::lemma {

using Line = ProofBuilder::Line;

/// <high>X -> <low>X, for low <= high.
Line mono(ProofBuilder& b, const ModalIndex& low, const ModalIndex& high, const Formula& x);

/// The line `imp` holds X -> Y; yields <a>X -> <a>Y.
Line dia_mono(ProofBuilder& b, const ModalIndex& a, Line imp);
/// The line `imp` holds X -> Y; yields [a]X -> [a]Y.
Line box_mono(ProofBuilder& b, const ModalIndex& a, Line imp);

/// <a><a>X -> <a>X.
Line four(ProofBuilder& b, const ModalIndex& a, const Formula& x);

/// The line `imp` holds P -> (Y -> Z); yields [a]P -> (<a>Y -> <a>Z).
Line box_dia(ProofBuilder& b, const ModalIndex& a, Line imp);

/// [n]A & [n]B -> [n](A & B).
Line box_conj(ProofBuilder& b, const ModalIndex& n, const Formula& x, const Formula& y);

/// The line `stable` holds S -> [n]S; yields (<n>Y & S) -> <n>(S & Y) when
/// `s_first`, else (<n>Y & S) -> <n>(Y & S).
Line absorb_stable(ProofBuilder& b, const ModalIndex& n, Line stable, const Formula& s,
                   const Formula& y, bool s_first);

/// <n>Y & <m>X -> <n>(Y & <m>X), for m < n.
Line absorb(ProofBuilder& b, const ModalIndex& m, const ModalIndex& n, const Formula& x,
            const Formula& y);

/// Lines proving P1, ..., Pk and a formula C with P1 -> (... -> (Pk -> C))
/// a tautology; yields C.
Line chain(ProofBuilder& b, const std::vector<Line>& premises, const Formula& c);

/// Worm-level helpers. Worms are passed by their index lists.

/// (H & <n>A) -> H<n>A, for H with all indices > n.
Line concat(ProofBuilder& b, const ModalIndex& n, const Worm& h, const Worm& a);
/// B -> (its first `len` indices).
Line weaken(ProofBuilder& b, const Worm& w, std::size_t len);
/// H<n>B -> <n>B, for the worm w = H<n>B with H of length `head` and all
/// indices in H at least n.
Line drop(ProofBuilder& b, const Worm& w, std::size_t head);

/// <alpha+1>phi -> Q^k_alpha(phi).
Line inclusion(ProofBuilder& b, const ModalIndex& alpha, std::uint64_t k, const Formula& phi);
/// <alpha+1>phi -> <landing>Q^k_alpha(phi), for landing <= alpha.
Line inclusion_dia(ProofBuilder& b, const ModalIndex& alpha, std::uint64_t k, const Formula& phi,
                   const ModalIndex& landing);

/// S -> [n]S when S is n-stable; nullopt otherwise.
std::optional<Line> stability(ProofBuilder& b, const Formula& s, const ModalIndex& n);

}  // namespace glp::lemma
