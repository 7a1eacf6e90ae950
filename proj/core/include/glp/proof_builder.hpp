#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "glp/proof.hpp"

namespace glp {

/// Accumulates proof lines. Adding a formula that is already proved (up to
/// canonical_form) returns the existing line instead of a new one.
class ProofBuilder {
 public:
  using Line = std::size_t;  // 1-based

  Line axiom(const Formula& f, const Justification& j);
  Line taut(const Formula& f) { return axiom(f, PropTaut{}); }
  /// Line `major` must hold an implication whose antecedent is line `minor`.
  Line mp(Line minor, Line major);
  Line nec(Line line, const ModalIndex& index);

  const Formula& formula(Line line) const { return lines_.at(line - 1).formula; }
  std::size_t size() const { return lines_.size(); }

  /// The lines `goal` depends on, renumbered, ending with `goal`.
  Proof extract(Line goal) const;

 private:
  Line push(const Formula& f, const Justification& j);

  std::vector<ProofLine> lines_;
  std::unordered_map<Formula, Line> by_canonical_;
};

}  // namespace glp
