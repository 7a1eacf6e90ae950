#pragma once

// Ordinals below epsilon_0 in Cantor normal form.
//
// An ordinal is a list of terms w^exponent * coefficient with strictly
// decreasing exponents and coefficients >= 1. The empty list is 0.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace glp {

using Natural = boost::multiprecision::cpp_int;

struct CnfTerm;

class CnfOrdinal {
 public:
  CnfOrdinal() = default;

  static CnfOrdinal zero() { return {}; }
  static CnfOrdinal natural(const Natural& n);
  static CnfOrdinal omega();
  /// w^exponent * coefficient; coefficient 0 yields 0.
  static CnfOrdinal term(CnfOrdinal exponent, const Natural& coefficient = 1);

  /// Builds from raw terms without normalizing. Throws DomainError when the
  /// terms are not in Cantor normal form.
  static CnfOrdinal from_terms(std::vector<CnfTerm> terms);

  const std::vector<CnfTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// The value when it is a natural number that fits in 64 bits.
  std::optional<std::uint64_t> as_natural() const;
  bool is_finite() const;

  friend bool operator==(const CnfOrdinal&, const CnfOrdinal&);
  friend std::strong_ordering operator<=>(const CnfOrdinal&, const CnfOrdinal&);

 private:
  std::vector<CnfTerm> terms_;
};

struct CnfTerm {
  CnfOrdinal exponent;
  Natural coefficient;

  friend bool operator==(const CnfTerm&, const CnfTerm&) = default;
};

enum class Cmp { LT, EQ, GT };

std::string to_string(Cmp c);
Cmp to_cmp(std::strong_ordering o);

Cmp ord_cmp(const CnfOrdinal& a, const CnfOrdinal& b);
CnfOrdinal ord_add(const CnfOrdinal& a, const CnfOrdinal& b);
CnfOrdinal omega_power(const CnfOrdinal& a);

struct Zero {
  friend bool operator==(const Zero&, const Zero&) = default;
};
struct Successor {
  CnfOrdinal pred;
  friend bool operator==(const Successor&, const Successor&) = default;
};
struct Limit {
  friend bool operator==(const Limit&, const Limit&) = default;
};
using OrdinalClass = std::variant<Zero, Successor, Limit>;

OrdinalClass ord_classify(const CnfOrdinal& a);

/// Checks the CNF invariant recursively: strictly decreasing exponents,
/// positive coefficients.
bool is_valid_cnf(const CnfOrdinal& a);

/// Parses the ordinal grammar, normalizing non-canonical sums ("1+w" is w).
/// Rejects "e0".
CnfOrdinal parse_ordinal(std::string_view text);
std::string print_ordinal(const CnfOrdinal& a);

/// Upper bound of an ordinal family: an ordinal below epsilon_0, or
/// epsilon_0 itself as the supremum of an unbounded family.
class OrdinalBound {
 public:
  static OrdinalBound below(CnfOrdinal a) { return OrdinalBound(std::move(a)); }
  static OrdinalBound epsilon_zero() { return OrdinalBound(); }

  bool is_epsilon_zero() const { return !value_.has_value(); }
  /// Precondition: !is_epsilon_zero().
  const CnfOrdinal& value() const { return *value_; }

  friend bool operator==(const OrdinalBound&, const OrdinalBound&) = default;
  /// Below(a) < Below(b) iff a < b; every Below(.) < EpsilonZero.
  friend std::strong_ordering operator<=>(const OrdinalBound& a, const OrdinalBound& b);

 private:
  OrdinalBound() = default;
  explicit OrdinalBound(CnfOrdinal a) : value_(std::move(a)) {}
  std::optional<CnfOrdinal> value_;
};

/// "e0" for epsilon_0, canonical ordinal text otherwise.
std::string print_bound(const OrdinalBound& b);

}  // namespace glp
