#pragma once

// Descent certificates for consistency of worm-axiomatized theories, and
// the Pi^0_1 ordinal of such theories.
//
// A certificate is a tree over formulas. Each worm node is classified as
//   Leaf           T
//   SuccessorStep  <0>B, with the single child B
//   ReductionStep  <n+1>B, with children Q^k_n(B) for k = 0..K
// and every edge carries a proof of parent -> <0>child. Children that do
// not normalize to a worm are Boundary nodes and are not expanded.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "glp/formula.hpp"
#include "glp/ordinal.hpp"
#include "glp/proof.hpp"

namespace glp {

struct TheorySchema {
  std::uint64_t offset;  // the family <n + offset>T, n = 0, 1, ...
  friend bool operator==(const TheorySchema&, const TheorySchema&) = default;
};

struct TheorySpec {
  std::vector<Worm> axioms;
  std::vector<TheorySchema> schemas;
  friend bool operator==(const TheorySpec&, const TheorySpec&) = default;
};

/// `AXIOM <worm>` and `SCHEMA offset=<nat>` lines; blank lines and `#`
/// comments are ignored. Throws ParseError, or DomainError on a
/// transfinite index.
TheorySpec parse_theory_spec(std::string_view text);

/// Below(max o(axiom)) without schemas, EpsilonZero with any schema.
OrdinalBound pi1_ordinal(const TheorySpec& t);

struct EquiChild {
  Formula formula;
  Proof edge;  // parent -> <0>formula
};

/// What the engine needs from a base theory X and its consistency notions.
class Provider {
 public:
  virtual ~Provider() = default;

  /// <n>_{T+phi} psi read over T: <n>(psi & phi).
  virtual Formula deduction_shift(const ModalIndex& n, const Formula& phi, const Formula& psi) const = 0;
  /// GLP is sound for the dual provability operators of X.
  virtual bool glp_sound() const = 0;
  /// The first `count` worms of a family whose union covers the target
  /// theory over X.
  virtual std::vector<Worm> coverage(std::size_t count) const = 0;
  /// For the parent <n+1>phi: Q^k_n(phi), k = 0..K, each with a proof of
  /// parent -> <0>child. nullopt if the provider cannot supply the step.
  virtual std::optional<std::vector<EquiChild>> equi_step(const ModalIndex& n, const Formula& phi,
                                                          std::uint64_t K) const = 0;
};

/// Plain GLP over EA: deduction shift by conjunction, children by the
/// inclusion lemma.
class SymbolicGlpProvider : public Provider {
 public:
  Formula deduction_shift(const ModalIndex& n, const Formula& phi, const Formula& psi) const override;
  bool glp_sound() const override { return true; }
  std::vector<Worm> coverage(std::size_t count) const override;
  std::optional<std::vector<EquiChild>> equi_step(const ModalIndex& n, const Formula& phi,
                                                  std::uint64_t K) const override;
};

enum class NodeKind { Leaf, SuccessorStep, ReductionStep, Boundary };

std::string to_string(NodeKind k);
std::optional<NodeKind> node_kind_from_string(std::string_view s);

inline constexpr const char* kMetaTheory = "EA+-strength";

struct CertificateNode {
  Formula formula;
  NodeKind kind = NodeKind::Leaf;
  std::optional<CnfOrdinal> ordinal;
  std::optional<Proof> edge_proof;  // absent at the root
  bool schema_marker = false;       // the children stand for all k
  std::string meta_theory = kMetaTheory;
  std::vector<CertificateNode> children;
};

struct Certificate {
  CertificateNode root;
};

inline constexpr std::uint64_t kDefaultK = 3;

/// Throws DomainError on a transfinite index or when the provider refuses.
Certificate build_certificate(const Worm& root, std::uint64_t K, const Provider& provider);

struct CertificateError {
  std::string path;  // "root", "root/0/2", ...
  std::string reason;
};

/// nullopt when every check passes.
std::optional<CertificateError> verify_certificate(const Certificate& c);

std::string serialize_certificate(const Certificate& c);
/// Throws ParseError on malformed JSON or field contents.
Certificate parse_certificate(std::string_view json);

std::size_t certificate_size(const Certificate& c);

}  // namespace glp
