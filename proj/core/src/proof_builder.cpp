#include "glp/proof_builder.hpp"

#include <algorithm>
#include <stdexcept>

namespace glp {

ProofBuilder::Line ProofBuilder::push(const Formula& f, const Justification& j) {
  Formula c = canonical_form(f);
  if (auto it = by_canonical_.find(c); it != by_canonical_.end()) return it->second;
  lines_.push_back({f, j});
  by_canonical_.emplace(std::move(c), lines_.size());
  return lines_.size();
}

ProofBuilder::Line ProofBuilder::axiom(const Formula& f, const Justification& j) { return push(f, j); }

ProofBuilder::Line ProofBuilder::mp(Line minor, Line major) {
  const Formula& m = formula(major);
  if (!m.is(FormulaKind::Imp)) throw std::logic_error("modus ponens on a non-implication");
  return push(m.rhs(), ModusPonens{minor, major});
}

ProofBuilder::Line ProofBuilder::nec(Line line, const ModalIndex& index) {
  return push(Formula::box(index, formula(line)), Necessitation{line, index});
}

Proof ProofBuilder::extract(Line goal) const {
  std::vector<bool> needed(lines_.size() + 1, false);
  needed[goal] = true;
  for (Line l = goal; l >= 1; --l) {
    if (!needed[l]) continue;
    const Justification& j = lines_[l - 1].justification;
    if (const auto* mp = std::get_if<ModusPonens>(&j)) {
      needed[mp->minor] = needed[mp->major] = true;
    } else if (const auto* nec = std::get_if<Necessitation>(&j)) {
      needed[nec->line] = true;
    }
  }
  std::vector<Line> renumber(lines_.size() + 1, 0);
  Proof p;
  for (Line l = 1; l <= goal; ++l) {
    if (!needed[l]) continue;
    Justification j = lines_[l - 1].justification;
    if (auto* mp = std::get_if<ModusPonens>(&j)) {
      mp->minor = renumber[mp->minor];
      mp->major = renumber[mp->major];
    } else if (auto* nec = std::get_if<Necessitation>(&j)) {
      nec->line = renumber[nec->line];
    }
    p.lines.push_back({lines_[l - 1].formula, std::move(j)});
    renumber[l] = p.lines.size();
  }
  p.goal = lines_[goal - 1].formula;
  return p;
}

}  // namespace glp
