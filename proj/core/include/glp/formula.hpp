#pragma once

// Closed formulas of the polymodal provability logic GLP.
//
// Formulas are immutable trees with shared structure; copying a Formula is a
// reference-count bump. Diamonds are stored as their own constructor. The
// proof checker reads <a>A as ~[a]~A (see canonical_form in proof.hpp); the
// printer never expands them.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "glp/ordinal.hpp"

namespace glp {

/// The ordinal alpha of a modality [alpha] or <alpha>.
class ModalIndex {
 public:
  ModalIndex() = default;
  explicit ModalIndex(CnfOrdinal value) : value_(std::move(value)) {}
  static ModalIndex nat(std::uint64_t n) { return ModalIndex(CnfOrdinal::natural(n)); }

  const CnfOrdinal& value() const { return value_; }
  std::optional<std::uint64_t> natural() const { return value_.as_natural(); }
  /// Throws DomainError unless the index is a natural number.
  std::uint64_t require_natural() const;
  ModalIndex successor() const;

  friend bool operator==(const ModalIndex&, const ModalIndex&) = default;
  friend std::strong_ordering operator<=>(const ModalIndex&, const ModalIndex&) = default;

 private:
  CnfOrdinal value_;
};

std::string print_index(const ModalIndex& i);

enum class FormulaKind { Top, Bottom, Neg, And, Or, Imp, Box, Dia };

struct FormulaNode;

class Formula {
 public:
  /// Top.
  Formula();

  static Formula top();
  static Formula bottom();
  static Formula neg(const Formula& a);
  static Formula conj(const Formula& a, const Formula& b);
  static Formula disj(const Formula& a, const Formula& b);
  static Formula imp(const Formula& a, const Formula& b);
  static Formula box(const ModalIndex& i, const Formula& a);
  static Formula dia(const ModalIndex& i, const Formula& a);
  static Formula box(std::uint64_t i, const Formula& a) { return box(ModalIndex::nat(i), a); }
  static Formula dia(std::uint64_t i, const Formula& a) { return dia(ModalIndex::nat(i), a); }

  FormulaKind kind() const;
  bool is(FormulaKind k) const { return kind() == k; }
  /// Operand of Neg/Box/Dia, left operand of a binary connective.
  Formula lhs() const;
  /// Right operand of a binary connective.
  Formula rhs() const;
  /// Only meaningful for Box and Dia.
  const ModalIndex& index() const;

  std::size_t hash() const;
  /// Number of connectives and constants.
  std::size_t size() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}
  static Formula make(FormulaKind kind, ModalIndex index, const Formula* a, const Formula* b);

  std::shared_ptr<const FormulaNode> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

/// Parses the formula grammar:
///   formula := imp ; imp := or ("->" imp)? ; or := and ("|" and)* ;
///   and := unary ("&" unary)* ;
///   unary := "~" unary | "[" ord "]" unary | "<" ord ">" unary | atom ;
///   atom := "T" | "F" | "(" formula ")".
/// Throws ParseError.
Formula parse_formula(std::string_view text);

/// Canonical text with minimal parentheses.
std::string print_formula(const Formula& f);

/// Rewrites T&A and A&T to A and ~~A to A, bottom up, to a fixed point.
Formula normalize_top(const Formula& f);

/// A worm <a1>...<an>T, stored as its index list. The empty worm is T.
class Worm {
 public:
  Worm() = default;
  explicit Worm(std::vector<ModalIndex> indices) : indices_(std::move(indices)) {}
  static Worm of(std::initializer_list<std::uint64_t> indices);
  static Worm of(const std::vector<std::uint64_t>& indices);

  const std::vector<ModalIndex>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }

  /// Indices as naturals; throws DomainError on a transfinite index.
  std::vector<std::uint64_t> naturals() const;

  Formula to_formula() const;

  friend bool operator==(const Worm&, const Worm&) = default;

 private:
  std::vector<ModalIndex> indices_;
};

/// The worm denoted by normalize_top(f), if it is a diamond chain ending in T.
std::optional<Worm> as_worm(const Formula& f);

/// Parses formula text that must denote a worm (after normalize_top).
Worm parse_worm(std::string_view text);
std::string print_worm(const Worm& w);

}  // namespace glp

template <>
struct std::hash<glp::Formula> {
  std::size_t operator()(const glp::Formula& f) const { return f.hash(); }
};
