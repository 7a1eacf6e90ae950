#include "lemmas.hpp"

namespace glp::lemma {

namespace {

Formula worm_slice(const Worm& w, std::size_t from, std::size_t to) {
  const auto& ix = w.indices();
  return Worm(std::vector<ModalIndex>(ix.begin() + from, ix.begin() + to)).to_formula();
}

}  // namespace

Line mono(ProofBuilder& b, const ModalIndex& low, const ModalIndex& high, const Formula& x) {
  Formula f = Formula::imp(Formula::dia(high, x), Formula::dia(low, x));
  if (low == high) return b.taut(f);
  return b.axiom(f, AxiomMono{low, high});
}

Line box_mono(ProofBuilder& b, const ModalIndex& a, Line imp) {
  const Formula f = b.formula(imp);
  Line n = b.nec(imp, a);
  Line k = b.axiom(Formula::imp(Formula::box(a, f),
                                Formula::imp(Formula::box(a, f.lhs()), Formula::box(a, f.rhs()))),
                   AxiomK{a});
  return b.mp(n, k);
}

Line dia_mono(ProofBuilder& b, const ModalIndex& a, Line imp) {
  const Formula f = b.formula(imp);
  const Formula x = f.lhs(), y = f.rhs();
  Line t = b.taut(Formula::imp(f, Formula::imp(Formula::neg(y), Formula::neg(x))));
  Line contra = b.mp(imp, t);
  Line boxed = box_mono(b, a, contra);
  return chain(b, {boxed}, Formula::imp(Formula::dia(a, x), Formula::dia(a, y)));
}

Line four(ProofBuilder& b, const ModalIndex& a, const Formula& x) {
  // [a]A -> [a][a]A for A = ~X via Loeb on C = [a]A & A, then contraposed.
  const Formula A = Formula::neg(x);
  const Formula boxA = Formula::box(a, A);
  const Formula C = Formula::conj(boxA, A);
  const Formula boxC = Formula::box(a, C);

  Line c_to_boxed = box_mono(b, a, b.taut(Formula::imp(C, A)));
  Line t = b.taut(Formula::imp(b.formula(c_to_boxed), Formula::imp(A, Formula::imp(boxC, C))));
  Line reflect = box_mono(b, a, b.mp(c_to_boxed, t));
  Line loeb = b.axiom(Formula::imp(Formula::box(a, Formula::imp(boxC, C)), boxC), AxiomLoeb{a});
  Line lift = box_mono(b, a, b.taut(Formula::imp(C, boxA)));
  return chain(b, {reflect, loeb, lift},
               Formula::imp(Formula::dia(a, Formula::dia(a, x)), Formula::dia(a, x)));
}

Line box_dia(ProofBuilder& b, const ModalIndex& a, Line imp) {
  const Formula f = b.formula(imp);
  const Formula p = f.lhs(), y = f.rhs().lhs(), z = f.rhs().rhs();
  const Formula inner = Formula::imp(Formula::neg(z), Formula::neg(y));
  Line t = b.taut(Formula::imp(f, Formula::imp(p, inner)));
  Line boxed = box_mono(b, a, b.mp(imp, t));
  Line k = b.axiom(Formula::imp(Formula::box(a, inner), Formula::imp(Formula::box(a, Formula::neg(z)),
                                                                     Formula::box(a, Formula::neg(y)))),
                   AxiomK{a});
  return chain(b, {boxed, k},
               Formula::imp(Formula::box(a, p), Formula::imp(Formula::dia(a, y), Formula::dia(a, z))));
}

Line box_conj(ProofBuilder& b, const ModalIndex& n, const Formula& x, const Formula& y) {
  const Formula xy = Formula::conj(x, y);
  Line boxed = box_mono(b, n, b.taut(Formula::imp(x, Formula::imp(y, xy))));
  Line k = b.axiom(Formula::imp(Formula::box(n, Formula::imp(y, xy)),
                                Formula::imp(Formula::box(n, y), Formula::box(n, xy))),
                   AxiomK{n});
  return chain(b, {boxed, k},
               Formula::imp(Formula::conj(Formula::box(n, x), Formula::box(n, y)), Formula::box(n, xy)));
}

Line absorb_stable(ProofBuilder& b, const ModalIndex& n, Line stable, const Formula& s,
                   const Formula& y, bool s_first) {
  const Formula inner = s_first ? Formula::conj(s, y) : Formula::conj(y, s);
  Line bd = box_dia(b, n, b.taut(Formula::imp(s, Formula::imp(y, inner))));
  return chain(b, {stable, bd},
               Formula::imp(Formula::conj(Formula::dia(n, y), s), Formula::dia(n, inner)));
}

Line absorb(ProofBuilder& b, const ModalIndex& m, const ModalIndex& n, const Formula& x,
            const Formula& y) {
  const Formula s = Formula::dia(m, x);
  Line ni = b.axiom(Formula::imp(s, Formula::box(n, s)), AxiomNegIntro{m, n});
  return absorb_stable(b, n, ni, s, y, false);
}

Line chain(ProofBuilder& b, const std::vector<Line>& premises, const Formula& c) {
  Formula f = c;
  for (auto it = premises.rbegin(); it != premises.rend(); ++it) f = Formula::imp(b.formula(*it), f);
  Line line = b.taut(f);
  for (Line p : premises) line = b.mp(p, line);
  return line;
}

Line concat(ProofBuilder& b, const ModalIndex& n, const Worm& h, const Worm& a) {
  const Formula A = a.to_formula();
  const Formula H = h.to_formula();
  std::vector<ModalIndex> joined = h.indices();
  joined.push_back(n);
  joined.insert(joined.end(), a.indices().begin(), a.indices().end());
  const Formula target = Formula::imp(Formula::conj(H, Formula::dia(n, A)), Worm(joined).to_formula());
  if (h.empty()) return b.taut(target);

  const ModalIndex& k = h.indices().front();
  const Worm rest(std::vector<ModalIndex>(h.indices().begin() + 1, h.indices().end()));
  Line ih = concat(b, n, rest, a);
  Line ab = absorb(b, n, k, A, rest.to_formula());
  Line dm = dia_mono(b, k, ih);
  return chain(b, {ab, dm}, target);
}

Line weaken(ProofBuilder& b, const Worm& w, std::size_t len) {
  const Formula target = Formula::imp(w.to_formula(), worm_slice(w, 0, len));
  if (len == 0 || len == w.size()) return b.taut(target);
  const Worm tail(std::vector<ModalIndex>(w.indices().begin() + 1, w.indices().end()));
  return dia_mono(b, w.indices().front(), weaken(b, tail, len - 1));
}

Line drop(ProofBuilder& b, const Worm& w, std::size_t head) {
  const ModalIndex& n = w.indices()[head];
  const Formula rest = worm_slice(w, head + 1, w.size());
  const Formula target = Formula::imp(w.to_formula(), Formula::dia(n, rest));
  if (head == 0) return b.taut(target);
  const ModalIndex& h = w.indices().front();
  const Worm tail(std::vector<ModalIndex>(w.indices().begin() + 1, w.indices().end()));
  Line dm = dia_mono(b, h, drop(b, tail, head - 1));
  Line mo = mono(b, n, h, Formula::dia(n, rest));
  Line fo = four(b, n, rest);
  return chain(b, {dm, mo, fo}, target);
}

std::optional<Line> stability(ProofBuilder& b, const Formula& s, const ModalIndex& n) {
  const Formula target = Formula::imp(s, Formula::box(n, s));
  switch (s.kind()) {
    case FormulaKind::Top: {
      Line boxed = b.nec(b.taut(s), n);
      return chain(b, {boxed}, target);
    }
    case FormulaKind::Bottom: return b.taut(target);
    case FormulaKind::Dia:
      if (!(s.index() < n)) return std::nullopt;
      return b.axiom(target, AxiomNegIntro{s.index(), n});
    case FormulaKind::And: {
      auto sx = stability(b, s.lhs(), n);
      if (!sx) return std::nullopt;
      auto sy = stability(b, s.rhs(), n);
      if (!sy) return std::nullopt;
      Line bc = box_conj(b, n, s.lhs(), s.rhs());
      return chain(b, {*sx, *sy, bc}, target);
    }
    case FormulaKind::Or: {
      auto sx = stability(b, s.lhs(), n);
      if (!sx) return std::nullopt;
      auto sy = stability(b, s.rhs(), n);
      if (!sy) return std::nullopt;
      Line bx = box_mono(b, n, b.taut(Formula::imp(s.lhs(), s)));
      Line by = box_mono(b, n, b.taut(Formula::imp(s.rhs(), s)));
      return chain(b, {*sx, *sy, bx, by}, target);
    }
    default: return std::nullopt;
  }
}

}  // namespace glp::lemma
