#include "glp/ordinal.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "glp/error.hpp"
#include "text_cursor.hpp"

namespace glp {

CnfOrdinal CnfOrdinal::natural(const Natural& n) {
  CnfOrdinal r;
  if (n > 0) r.terms_.push_back({CnfOrdinal{}, n});
  return r;
}

CnfOrdinal CnfOrdinal::omega() { return term(natural(1)); }

CnfOrdinal CnfOrdinal::term(CnfOrdinal exponent, const Natural& coefficient) {
  CnfOrdinal r;
  if (coefficient > 0) r.terms_.push_back({std::move(exponent), coefficient});
  return r;
}

CnfOrdinal CnfOrdinal::from_terms(std::vector<CnfTerm> terms) {
  CnfOrdinal r;
  r.terms_ = std::move(terms);
  if (!is_valid_cnf(r)) throw DomainError("terms are not in Cantor normal form");
  return r;
}

std::optional<std::uint64_t> CnfOrdinal::as_natural() const {
  if (terms_.empty()) return 0;
  if (terms_.size() != 1 || !terms_[0].exponent.is_zero()) return std::nullopt;
  const Natural& c = terms_[0].coefficient;
  if (c > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return static_cast<std::uint64_t>(c);
}

bool CnfOrdinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

bool operator==(const CnfOrdinal& a, const CnfOrdinal& b) { return a.terms_ == b.terms_; }

std::strong_ordering operator<=>(const CnfOrdinal& a, const CnfOrdinal& b) {
  const auto& x = a.terms_;
  const auto& y = b.terms_;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (auto c = x[i].exponent <=> y[i].exponent; c != 0) return c;
    if (x[i].coefficient != y[i].coefficient) {
      return x[i].coefficient < y[i].coefficient ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
    }
  }
  return x.size() <=> y.size();
}

std::string to_string(Cmp c) {
  switch (c) {
    case Cmp::LT: return "LT";
    case Cmp::EQ: return "EQ";
    case Cmp::GT: return "GT";
  }
  return "?";
}

Cmp to_cmp(std::strong_ordering o) {
  if (o < 0) return Cmp::LT;
  if (o > 0) return Cmp::GT;
  return Cmp::EQ;
}

Cmp ord_cmp(const CnfOrdinal& a, const CnfOrdinal& b) { return to_cmp(a <=> b); }

CnfOrdinal ord_add(const CnfOrdinal& a, const CnfOrdinal& b) {
  if (b.is_zero()) return a;
  const CnfOrdinal& lead = b.terms().front().exponent;
  std::vector<CnfTerm> out;
  for (const CnfTerm& t : a.terms()) {
    if (t.exponent > lead) {
      out.push_back(t);
    } else {
      break;
    }
  }
  auto rest = b.terms().begin();
  const bool merge = out.size() < a.terms().size() && a.terms()[out.size()].exponent == lead;
  if (merge) {
    out.push_back({lead, a.terms()[out.size()].coefficient + rest->coefficient});
    ++rest;
  }
  out.insert(out.end(), rest, b.terms().end());
  return CnfOrdinal::from_terms(std::move(out));
}

CnfOrdinal omega_power(const CnfOrdinal& a) { return CnfOrdinal::term(a, 1); }

OrdinalClass ord_classify(const CnfOrdinal& a) {
  if (a.is_zero()) return Zero{};
  const CnfTerm& last = a.terms().back();
  if (!last.exponent.is_zero()) return Limit{};
  std::vector<CnfTerm> terms = a.terms();
  if (last.coefficient == 1) {
    terms.pop_back();
  } else {
    terms.back().coefficient -= 1;
  }
  return Successor{CnfOrdinal::from_terms(std::move(terms))};
}

bool is_valid_cnf(const CnfOrdinal& a) {
  const auto& t = a.terms();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].coefficient < 1) return false;
    if (!is_valid_cnf(t[i].exponent)) return false;
    if (i > 0 && !(t[i].exponent < t[i - 1].exponent)) return false;
  }
  return true;
}

namespace detail {

namespace {

CnfOrdinal parse_exponent_atom(TextCursor& cur) {
  if (cur.peek_digit()) return CnfOrdinal::natural(cur.read_natural());
  if (cur.accept("w")) return CnfOrdinal::omega();
  if (cur.accept("(")) {
    CnfOrdinal inner = parse_ordinal_at(cur);
    cur.expect(")");
    return inner;
  }
  cur.fail("expected an ordinal exponent");
}

Natural parse_optional_coefficient(TextCursor& cur) {
  if (cur.accept("*")) return cur.read_natural();
  return 1;
}

CnfOrdinal parse_cnf_term(TextCursor& cur) {
  if (cur.starts_with("e0")) cur.fail("epsilon_0 is not an ordinal below epsilon_0");
  if (cur.peek_digit()) return CnfOrdinal::natural(cur.read_natural());
  if (cur.accept("w")) {
    if (cur.accept("^")) {
      CnfOrdinal exponent = parse_exponent_atom(cur);
      return CnfOrdinal::term(std::move(exponent), parse_optional_coefficient(cur));
    }
    return CnfOrdinal::term(CnfOrdinal::natural(1), parse_optional_coefficient(cur));
  }
  cur.fail("expected an ordinal term");
}

}  // namespace

CnfOrdinal parse_ordinal_at(TextCursor& cur) {
  CnfOrdinal sum = parse_cnf_term(cur);
  while (cur.accept("+")) sum = ord_add(sum, parse_cnf_term(cur));
  return sum;
}

}  // namespace detail

CnfOrdinal parse_ordinal(std::string_view text) {
  detail::TextCursor cur(text);
  CnfOrdinal a = detail::parse_ordinal_at(cur);
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  return a;
}

namespace {

std::string print_exponent_atom(const CnfOrdinal& e) {
  if (e.is_finite()) return print_ordinal(e);
  if (e == CnfOrdinal::omega()) return "w";
  return "(" + print_ordinal(e) + ")";
}

std::string print_term(const CnfTerm& t) {
  const std::string coeff = t.coefficient.str();
  if (t.exponent.is_zero()) return coeff;
  std::string base = t.exponent == CnfOrdinal::natural(1) ? "w" : "w^" + print_exponent_atom(t.exponent);
  if (t.coefficient != 1) base += "*" + coeff;
  return base;
}

}  // namespace

std::string print_ordinal(const CnfOrdinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const CnfTerm& t : a.terms()) {
    if (!out.empty()) out += "+";
    out += print_term(t);
  }
  return out;
}

std::strong_ordering operator<=>(const OrdinalBound& a, const OrdinalBound& b) {
  if (a.is_epsilon_zero() || b.is_epsilon_zero()) {
    return a.is_epsilon_zero() <=> b.is_epsilon_zero();
  }
  return a.value() <=> b.value();
}

std::string print_bound(const OrdinalBound& b) {
  return b.is_epsilon_zero() ? "e0" : print_ordinal(b.value());
}

}  // namespace glp
