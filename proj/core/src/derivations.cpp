#include "glp/derivations.hpp"

#include <string>
#include <unordered_map>

#include "glp/error.hpp"
#include "glp/reduction.hpp"
#include "lemmas.hpp"

namespace glp {

namespace lemma {

Line inclusion(ProofBuilder& b, const ModalIndex& alpha, std::uint64_t k, const Formula& phi) {
  const ModalIndex succ = alpha.successor();
  const Formula from = Formula::dia(succ, phi);
  Formula q = Formula::dia(alpha, phi);
  Line line = mono(b, alpha, succ, phi);
  for (std::uint64_t j = 0; j < k; ++j) {
    const Formula both = Formula::conj(phi, q);
    const Formula next = Formula::dia(alpha, both);
    Line ni = b.axiom(Formula::imp(q, Formula::box(succ, q)), AxiomNegIntro{alpha, succ});
    Line bd = box_dia(b, succ, b.taut(Formula::imp(q, Formula::imp(phi, both))));
    Line mo = mono(b, alpha, succ, both);
    line = chain(b, {line, ni, bd, mo}, Formula::imp(from, next));
    q = next;
  }
  return line;
}

Line inclusion_dia(ProofBuilder& b, const ModalIndex& alpha, std::uint64_t k, const Formula& phi,
                   const ModalIndex& landing) {
  const Formula q = q_formula(alpha, k, phi);
  Line wide = inclusion(b, alpha, k + 1, phi);
  Line dm = dia_mono(b, alpha, b.taut(Formula::imp(Formula::conj(phi, q), q)));
  Line mo = mono(b, landing, alpha, q);
  return chain(b, {wide, dm, mo},
               Formula::imp(Formula::dia(alpha.successor(), phi), Formula::dia(landing, q)));
}

}  // namespace lemma

Proof derive_inclusion(const ModalIndex& alpha, std::uint64_t k, const Formula& phi) {
  ProofBuilder b;
  Proof p = b.extract(lemma::inclusion(b, alpha, k, phi));
  p.goal = Formula::imp(Formula::dia(alpha.successor(), phi), q_formula(alpha, k, phi));
  return p;
}

Proof derive_inclusion_dia(const ModalIndex& alpha, std::uint64_t k, const Formula& phi,
                           const ModalIndex& landing) {
  if (landing > alpha) throw DomainError("landing index exceeds alpha");
  ProofBuilder b;
  Proof p = b.extract(lemma::inclusion_dia(b, alpha, k, phi, landing));
  p.goal = Formula::imp(Formula::dia(alpha.successor(), phi), Formula::dia(landing, q_formula(alpha, k, phi)));
  return p;
}

// ---------------------------------------------------------------------------
// certify_less
//
// lt(n, A, B) proves B -> <n>A and imp(n, B, A) proves B -> A, for worms with
// all indices >= n. Both recurse on the split of a worm at its first n:
// B = H<n>B' with H the maximal prefix above n.

namespace {

using lemma::Line;

Worm slice(const Worm& w, std::size_t from, std::size_t to) {
  return Worm(std::vector<ModalIndex>(w.indices().begin() + from, w.indices().begin() + to));
}
Worm slice(const Worm& w, std::size_t from) { return slice(w, from, w.size()); }

std::size_t prefix_above(const Worm& w, const ModalIndex& n) {
  std::size_t i = 0;
  while (i < w.size() && w.indices()[i] > n) ++i;
  return i;
}

class Search {
 public:
  explicit Search(ProofBuilder& b) : b_(b) {}

  std::optional<Line> lt(const ModalIndex& n, const Worm& a, const Worm& b, std::uint64_t depth) {
    return memo('<', n, a, b, depth, [&] { return lt_uncached(n, a, b, depth); });
  }

  std::optional<Line> imp(const ModalIndex& n, const Worm& b, const Worm& a, std::uint64_t depth) {
    if (a == b || a.empty()) return b_.taut(Formula::imp(b.to_formula(), a.to_formula()));
    if (b.empty()) return std::nullopt;
    return memo('>', n, a, b, depth, [&] { return imp_uncached(n, b, a, depth); });
  }

 private:
  template <class F>
  std::optional<Line> memo(char kind, const ModalIndex& n, const Worm& a, const Worm& b,
                           std::uint64_t depth, F compute) {
    if (depth == 0) return std::nullopt;
    std::string key = std::string(1, kind) + print_index(n) + "|" + print_worm(a) + "|" + print_worm(b);
    if (auto it = proved_.find(key); it != proved_.end()) return it->second;
    if (auto it = failed_.find(key); it != failed_.end() && it->second >= depth) return std::nullopt;
    std::optional<Line> r = compute();
    if (r) {
      proved_.emplace(std::move(key), *r);
    } else {
      failed_[key] = depth;
    }
    return r;
  }

  std::optional<Line> lt_uncached(const ModalIndex& n, const Worm& a, const Worm& b, std::uint64_t depth) {
    if (b.empty()) return std::nullopt;
    const Formula A = a.to_formula(), B = b.to_formula();
    const Formula goal = Formula::imp(B, Formula::dia(n, A));
    const std::uint64_t d = depth - 1;

    if (a.empty()) {
      const ModalIndex& k = b.indices().front();
      const Formula rest = slice(b, 1).to_formula();
      Line mo = lemma::mono(b_, n, k, rest);
      Line dm = lemma::dia_mono(b_, n, b_.taut(Formula::imp(rest, Formula::top())));
      return lemma::chain(b_, {mo, dm}, goal);
    }

    if (auto l = fast_path(n, a, b)) return l;

    const auto& bi = b.indices();
    for (std::size_t p = 0; p < bi.size(); ++p) {
      if (bi[p] != n) continue;
      const Worm rest = slice(b, p + 1);
      if (auto l = imp(n, rest, a, d)) {
        Line dr = lemma::drop(b_, b, p);
        Line dm = lemma::dia_mono(b_, n, *l);
        return lemma::chain(b_, {dr, dm}, goal);
      }
      if (auto l = lt(n, a, rest, d)) {
        Line dr = lemma::drop(b_, b, p);
        Line dm = lemma::dia_mono(b_, n, *l);
        Line fo = lemma::four(b_, n, A);
        return lemma::chain(b_, {dr, dm, fo}, goal);
      }
      break;
    }

    const std::size_t h = prefix_above(b, n);
    if (h == 0) return std::nullopt;
    const Worm head = slice(b, 0, h);
    const ModalIndex up = n.successor();
    const std::size_t q = prefix_above(a, n);
    if (q < a.size()) {
      const Worm ha = slice(a, 0, q), rest = slice(a, q + 1);
      auto l1 = lt(up, ha, head, d);
      if (!l1) return std::nullopt;
      auto l2 = lt(n, rest, b, d);
      if (!l2) return std::nullopt;
      Line w = lemma::weaken(b_, b, h);
      Line ab = lemma::absorb(b_, n, up, rest.to_formula(), ha.to_formula());
      Line dm = lemma::dia_mono(b_, up, lemma::concat(b_, n, ha, rest));
      Line mo = lemma::mono(b_, n, up, A);
      return lemma::chain(b_, {w, *l1, *l2, ab, dm, mo}, goal);
    }
    auto l1 = lt(up, a, head, d);
    if (!l1) return std::nullopt;
    Line w = lemma::weaken(b_, b, h);
    Line mo = lemma::mono(b_, n, up, A);
    return lemma::chain(b_, {w, *l1, mo}, goal);
  }

  // <m>T -> <n><alpha>^{j+1}T for n <= alpha < m, straight from the
  // inclusion lemma.
  std::optional<Line> fast_path(const ModalIndex& n, const Worm& a, const Worm& b) {
    if (b.size() != 1) return std::nullopt;
    const ModalIndex& m = b.indices().front();
    const ModalIndex& alpha = a.indices().front();
    for (const auto& i : a.indices()) {
      if (i != alpha) return std::nullopt;
    }
    if (!(n <= alpha && alpha < m)) return std::nullopt;
    Line mo = lemma::mono(b_, alpha.successor(), m, Formula::top());
    Line inc = lemma::inclusion_dia(b_, alpha, a.size() - 1, Formula::top(), n);
    return lemma::chain(b_, {mo, inc}, Formula::imp(b.to_formula(), Formula::dia(n, a.to_formula())));
  }

  std::optional<Line> imp_uncached(const ModalIndex& n, const Worm& b, const Worm& a, std::uint64_t depth) {
    const Formula goal = Formula::imp(b.to_formula(), a.to_formula());
    const std::uint64_t d = depth - 1;
    const std::size_t h = prefix_above(b, n);
    const Worm head = slice(b, 0, h);
    const ModalIndex up = n.successor();
    const std::size_t q = prefix_above(a, n);
    if (q < a.size()) {
      const Worm ha = slice(a, 0, q), rest = slice(a, q + 1);
      auto l1 = imp(up, head, ha, d);
      if (!l1) return std::nullopt;
      auto l2 = lt(n, rest, b, d);
      if (!l2) return std::nullopt;
      Line w = lemma::weaken(b_, b, h);
      Line cc = lemma::concat(b_, n, ha, rest);
      return lemma::chain(b_, {w, *l1, *l2, cc}, goal);
    }
    auto l1 = imp(up, head, a, d);
    if (!l1) return std::nullopt;
    Line w = lemma::weaken(b_, b, h);
    return lemma::chain(b_, {w, *l1}, goal);
  }

  ProofBuilder& b_;
  std::unordered_map<std::string, Line> proved_;
  std::unordered_map<std::string, std::uint64_t> failed_;
};

}  // namespace

std::optional<Proof> certify_less(const Worm& a, const Worm& b, std::uint64_t depth) {
  const Formula goal = Formula::imp(b.to_formula(), Formula::dia(0, a.to_formula()));
  if (is_tautology(goal)) return Proof{{ProofLine{goal, PropTaut{}}}, goal};
  ProofBuilder builder;
  Search search(builder);
  auto line = search.lt(ModalIndex::nat(0), a, b, depth);
  if (!line) return std::nullopt;
  Proof p = builder.extract(*line);
  p.goal = goal;
  return p;
}

}  // namespace glp
