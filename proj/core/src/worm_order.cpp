#include "glp/worm_order.hpp"

#include <algorithm>
#include <vector>

#include "glp/error.hpp"

namespace glp {

Worm demote(const Worm& w) {
  std::vector<std::uint64_t> n = w.naturals();
  for (auto& i : n) {
    if (i == 0) throw DomainError("cannot demote a worm containing index 0");
    --i;
  }
  return Worm::of(n);
}

Worm promote(const Worm& w) {
  std::vector<std::uint64_t> n = w.naturals();
  for (auto& i : n) ++i;
  return Worm::of(n);
}

namespace detail {

CnfOrdinal worm_ordinal_at(std::span<const std::uint64_t> w, std::uint64_t level) {
  if (w.empty()) return CnfOrdinal::zero();
  auto split = std::find(w.begin(), w.end(), level);
  if (split == w.end()) return omega_power(worm_ordinal_at(w, level + 1));
  auto head = w.first(static_cast<std::size_t>(split - w.begin()));
  auto body = w.subspan(head.size() + 1);
  return ord_add(worm_ordinal_at(body, level), omega_power(worm_ordinal_at(head, level + 1)));
}

namespace {

using Segment = std::span<const std::uint64_t>;

// The w-power terms of a worm in the order they are summed, with absorbed
// terms removed. What remains is a non-increasing exponent sequence: the
// Cantor normal form with coefficients spelled out as repetitions.
std::vector<Segment> surviving_exponents(Segment w, std::uint64_t level) {
  std::vector<Segment> segments;  // H1, H2, ..., Hm split at `level`
  std::size_t start = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == level) {
      segments.push_back(w.subspan(start, i - start));
      start = i + 1;
    }
  }
  segments.push_back(w.subspan(start));
  if (segments.back().empty()) segments.pop_back();  // an empty last segment contributes 0
  // Sum order is Hm, ..., H1; the rightmost summand H1 absorbs everything
  // smaller to its left, so scan from H1 leftwards keeping the running max.
  std::vector<Segment> survivors;
  const Segment* max = nullptr;
  for (const Segment& seg : segments) {
    if (max == nullptr || worm_cmp_structural_at(seg, *max, level + 1) != Cmp::LT) {
      survivors.push_back(seg);
      max = &seg;
    }
  }
  std::reverse(survivors.begin(), survivors.end());
  return survivors;
}

}  // namespace

Cmp worm_cmp_structural_at(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                           std::uint64_t level) {
  if (a.empty() || b.empty()) {
    if (a.empty() && b.empty()) return Cmp::EQ;
    return a.empty() ? Cmp::LT : Cmp::GT;
  }
  const auto ta = surviving_exponents(a, level);
  const auto tb = surviving_exponents(b, level);
  for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
    if (Cmp c = worm_cmp_structural_at(ta[i], tb[i], level + 1); c != Cmp::EQ) return c;
  }
  if (ta.size() == tb.size()) return Cmp::EQ;
  return ta.size() < tb.size() ? Cmp::LT : Cmp::GT;
}

}  // namespace detail

CnfOrdinal worm_ordinal(const Worm& w) {
  const auto n = w.naturals();
  return detail::worm_ordinal_at(n, 0);
}

namespace {

void append_worm_of(const CnfOrdinal& a, std::vector<std::uint64_t>& out) {
  if (a.is_zero()) return;
  // a = rest + w^gamma, peeling one copy of the smallest term.
  std::vector<CnfTerm> terms = a.terms();
  CnfOrdinal gamma = terms.back().exponent;
  if (terms.back().coefficient == 1) {
    terms.pop_back();
  } else {
    terms.back().coefficient -= 1;
  }
  const CnfOrdinal rest = CnfOrdinal::from_terms(std::move(terms));

  std::vector<std::uint64_t> head;
  append_worm_of(gamma, head);
  for (auto& i : head) ++i;
  out.insert(out.end(), head.begin(), head.end());
  if (rest.is_zero() && !head.empty()) return;
  out.push_back(0);
  append_worm_of(rest, out);
}

}  // namespace

Worm worm_of_ordinal(const CnfOrdinal& a) {
  std::vector<std::uint64_t> out;
  append_worm_of(a, out);
  return Worm::of(out);
}

Cmp worm_cmp(const Worm& a, const Worm& b) { return ord_cmp(worm_ordinal(a), worm_ordinal(b)); }

Cmp worm_cmp_structural(const Worm& a, const Worm& b) {
  const auto x = a.naturals();
  const auto y = b.naturals();
  return detail::worm_cmp_structural_at(x, y, 0);
}

}  // namespace glp
