#pragma once

// Fundamental sequences Q^k_n, the reflection rule
//   RR^n(U+phi):  psi / <n>(psi & phi)
// and its elimination in favour of the Q^k_n(phi) axioms.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "glp/formula.hpp"
#include "glp/error.hpp"
#include "glp/proof.hpp"

namespace glp {

/// Q^0_n(phi) = <n>phi, Q^{k+1}_n(phi) = <n>(phi & Q^k_n(phi)).
Formula q_formula(const ModalIndex& n, std::uint64_t k, const Formula& phi);
Formula q_formula_normalized(const ModalIndex& n, std::uint64_t k, const Formula& phi);

/// Sound test for GLP |- psi -> [n]psi: T, F, <m>X with m < n, and
/// conjunctions and disjunctions of such.
bool n_stable(const Formula& psi, const ModalIndex& n);

struct RuleStep {
  Formula premise;
  Formula conclusion;
  friend bool operator==(const RuleStep&, const RuleStep&) = default;
};

/// A derivation in U + RR^n(U+phi). U is GLP plus `base_axioms`; each base
/// axiom must itself be a GLP axiom instance. Each premise is a base axiom
/// or a propositional consequence of the base axioms and earlier
/// conclusions; `conclusion` is a propositional consequence of those.
struct RuleDerivation {
  std::vector<Formula> base_axioms;
  ModalIndex n;
  Formula phi;
  std::vector<RuleStep> steps;
  Formula conclusion;
  friend bool operator==(const RuleDerivation&, const RuleDerivation&) = default;
};

/// Invalid derivation. `step()` is 1-based; 0 refers to the base axioms or
/// the final conclusion as named by the message.
class DerivationError : public DomainError {
 public:
  DerivationError(std::size_t step, const std::string& what)
      : DomainError(what), step_(step) {}
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

struct Elimination {
  std::uint64_t k;
  Proof proof;  // Q^k_n(phi) -> conclusion
};

/// Throws DerivationError.
Elimination eliminate_rule(const RuleDerivation& d);

/// A proof of (<n>phi & psi) -> <n>(psi & phi). Throws DomainError when
/// m_marker > n or psi is not n_stable.
Proof collapse_rule(const ModalIndex& n, const ModalIndex& m_marker, const Formula& phi,
                    const Formula& psi);

/// [<m>Q^k_n(phi) for k = 0..K]. Throws DomainError when m > n.
std::vector<Formula> equi_children(const ModalIndex& m, const ModalIndex& n, const Formula& phi,
                                   std::uint64_t K);
/// A proof of <m><n+1>phi -> <m>Q^k_n(phi), for m <= n.
Proof equi_child_witness(const ModalIndex& m, const ModalIndex& n, const Formula& phi, std::uint64_t k);

/// Line format, numbered like a proof file:
///   i. <formula> ; BASE
///   i. <formula> ; RR(p,<n>,<phi>)     rule applied to line p
///   i. <formula> ; PROP(i,j,...)       propositional consequence of lines
///   GOAL <formula>
std::string print_rule_derivation(const RuleDerivation& d);
/// Throws ParseError on syntax, DerivationError on mismatched rule lines.
RuleDerivation parse_rule_derivation(std::string_view text);

}  // namespace glp
