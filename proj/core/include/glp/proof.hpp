#pragma once

// Hilbert-style proofs for GLP and their checker.
//
// Axiom schemes (alpha, beta ordinals):
//   K         [a](A -> B) -> ([a]A -> [a]B)
//   LOEB      [a]([a]A -> A) -> [a]A
//   MONO      [a]A -> [b]A            for a <= b
//   NEGINTRO  <a>A -> [b]<a>A         for a < b
//   TAUT      propositional tautologies, boxed subformulas read as atoms
// Rules: MP(i,j) takes A from line i and A -> B from line j; NEC(i,a) turns
// line i's A into [a]A.
//
// The checker compares formulas by canonical_form: <a>A is read as ~[a]~A,
// double negations and T-conjuncts are dropped. An axiom line may be given
// as a scheme instance or as its contrapositive.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "glp/formula.hpp"

namespace glp {

struct AxiomK {
  ModalIndex index;
  friend bool operator==(const AxiomK&, const AxiomK&) = default;
};
struct AxiomLoeb {
  ModalIndex index;
  friend bool operator==(const AxiomLoeb&, const AxiomLoeb&) = default;
};
struct AxiomMono {
  ModalIndex low, high;
  friend bool operator==(const AxiomMono&, const AxiomMono&) = default;
};
struct AxiomNegIntro {
  ModalIndex low, high;
  friend bool operator==(const AxiomNegIntro&, const AxiomNegIntro&) = default;
};
struct PropTaut {
  friend bool operator==(const PropTaut&, const PropTaut&) = default;
};
/// Line numbers are 1-based, as in the file format.
struct ModusPonens {
  std::size_t minor;  // A
  std::size_t major;  // A -> B
  friend bool operator==(const ModusPonens&, const ModusPonens&) = default;
};
struct Necessitation {
  std::size_t line;
  ModalIndex index;
  friend bool operator==(const Necessitation&, const Necessitation&) = default;
};

using Justification =
    std::variant<AxiomK, AxiomLoeb, AxiomMono, AxiomNegIntro, PropTaut, ModusPonens, Necessitation>;

std::string print_justification(const Justification& j);
Justification parse_justification(std::string_view text);

struct ProofLine {
  Formula formula;
  Justification justification;
  friend bool operator==(const ProofLine&, const ProofLine&) = default;
};

struct Proof {
  std::vector<ProofLine> lines;
  Formula goal;
  friend bool operator==(const Proof&, const Proof&) = default;
};

struct ProofError {
  std::size_t line;  // 1-based; lines.size() + 1 denotes the GOAL line
  std::string reason;
};

struct CheckResult {
  std::optional<ProofError> error;
  bool ok() const { return !error.has_value(); }
};

/// <a>A becomes ~[a]~A; ~~A becomes A; T&A and A&T become A.
Formula canonical_form(const Formula& f);

/// True when f is a propositional tautology with its maximal boxed
/// subformulas (after canonical_form) read as atoms. Formulas with more
/// than `kMaxTautologyAtoms` distinct atoms are reported as non-tautologies.
bool is_tautology(const Formula& f);
inline constexpr std::size_t kMaxTautologyAtoms = 22;

/// Every axiom justification (including PropTaut) of which f is an instance.
std::vector<Justification> match_axiom(const Formula& f);

CheckResult check_proof(const Proof& p);

/// `n. <formula> ; <justification>` per line, then `GOAL <formula>`.
/// Every line ends in '\n'.
std::string print_proof(const Proof& p);
/// Throws ParseError with the offending 1-based line in the message.
Proof parse_proof(std::string_view text);

}  // namespace glp
