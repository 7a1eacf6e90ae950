#include <gtest/gtest.h>

#include <json.hpp>

#include "glp/analysis.hpp"
#include "glp/derivations.hpp"
#include "glp/error.hpp"
#include "glp/reduction.hpp"
#include "glp/worm_order.hpp"
#include "support/generators.hpp"
#include "support/mutations.hpp"

namespace glp {
namespace {

using nlohmann::json;

Formula f(const char* s) { return parse_formula(s); }

Certificate build(std::initializer_list<std::uint64_t> w, std::uint64_t K) {
  return build_certificate(Worm::of(w), K, SymbolicGlpProvider{});
}

// Node shape without proofs: formula, kind, label and children.
std::string shape(const CertificateNode& n) {
  std::string s = print_formula(n.formula) + "|" + to_string(n.kind) + "|" +
                  (n.ordinal ? print_ordinal(*n.ordinal) : "-") + "[";
  for (const auto& c : n.children) s += shape(c) + ",";
  return s + "]";
}

TEST(BuildCertificate, Leaf) {
  for (std::uint64_t K : {0u, 3u}) {
    const Certificate c = build_certificate(Worm(), K, SymbolicGlpProvider{});
    EXPECT_EQ(c.root.kind, NodeKind::Leaf);
    EXPECT_TRUE(c.root.children.empty());
    EXPECT_EQ(c.root.ordinal, CnfOrdinal::zero());
  }
}

TEST(BuildCertificate, ReductionOfOne) {
  const Certificate c = build({1}, 2);
  ASSERT_EQ(c.root.kind, NodeKind::ReductionStep);
  EXPECT_TRUE(c.root.schema_marker);
  ASSERT_EQ(c.root.children.size(), 3u);
  const char* expected[] = {"<0>T", "<0><0>T", "<0><0><0>T"};
  for (std::size_t i = 0; i < 3; ++i) {
    const CertificateNode& child = c.root.children[i];
    EXPECT_EQ(print_formula(normalize_top(child.formula)), expected[i]);
    ASSERT_TRUE(child.edge_proof);
    EXPECT_TRUE(check_proof(*child.edge_proof).ok());
    ASSERT_TRUE(child.ordinal);
    EXPECT_EQ(*child.ordinal, CnfOrdinal::natural(i + 1));
    EXPECT_LT(*child.ordinal, CnfOrdinal::omega());
  }
  EXPECT_FALSE(verify_certificate(c).has_value());
}

TEST(BuildCertificate, SuccessorThenReduction) {
  const Certificate c = build({0, 1}, 1);
  ASSERT_EQ(c.root.kind, NodeKind::SuccessorStep);
  EXPECT_FALSE(c.root.schema_marker);
  ASSERT_EQ(c.root.children.size(), 1u);
  const CertificateNode& one = c.root.children[0];
  EXPECT_EQ(one.formula, f("<1>T"));
  EXPECT_EQ(one.kind, NodeKind::ReductionStep);
  EXPECT_EQ(one.children.size(), 2u);
  EXPECT_FALSE(verify_certificate(c).has_value());
}

TEST(BuildCertificate, BoundaryChildren) {
  // <2><1>T reduces to Q^k_1(<1>T), whose conjunctions are not worms.
  const Certificate c = build({2, 1}, 2);
  ASSERT_EQ(c.root.children.size(), 3u);
  EXPECT_EQ(c.root.children[0].kind, NodeKind::ReductionStep);
  EXPECT_EQ(c.root.children[1].kind, NodeKind::Boundary);
  EXPECT_FALSE(c.root.children[1].ordinal.has_value());
  EXPECT_TRUE(c.root.children[1].children.empty());
  EXPECT_FALSE(verify_certificate(c).has_value());
}

TEST(BuildCertificate, RejectsTransfinite) {
  EXPECT_THROW(build_certificate(Worm({ModalIndex(CnfOrdinal::omega())}), 1, SymbolicGlpProvider{}), DomainError);
}

TEST(BuildCertificate, AllShortWormsVerify) {
  for (const Worm& w : testing::enumerate_worms(2, 3)) {
    const Certificate c = build_certificate(w, kDefaultK, SymbolicGlpProvider{});
    const auto e = verify_certificate(c);
    ASSERT_FALSE(e.has_value()) << print_worm(w) << ": " << e->path << " " << e->reason;
    const Certificate back = parse_certificate(serialize_certificate(c));
    ASSERT_FALSE(verify_certificate(back).has_value());
    ASSERT_EQ(serialize_certificate(back), serialize_certificate(c));
  }
}

TEST(BuildCertificate, LabelsDescend) {
  std::function<void(const CertificateNode&)> walk = [&](const CertificateNode& n) {
    for (const auto& c : n.children) {
      if (n.ordinal && c.ordinal) ASSERT_EQ(ord_cmp(*c.ordinal, *n.ordinal), Cmp::LT);
      walk(c);
    }
  };
  for (const Worm& w : testing::enumerate_worms(2, 3)) walk(build_certificate(w, 2, SymbolicGlpProvider{}).root);
}

TEST(Certificate, JsonFields) {
  const json j = json::parse(serialize_certificate(build({0, 1}, 1)));
  EXPECT_EQ(j["root"], "<0><1>T");
  EXPECT_EQ(j["kind"], "SuccessorStep");
  EXPECT_EQ(j["ordinal"], "w+1");
  EXPECT_EQ(j["schema_marker"], false);
  EXPECT_EQ(j["meta_theory"], "EA+-strength");
  EXPECT_TRUE(j["edge_proof"].is_null());
  EXPECT_EQ(j["children"][0]["root"], "<1>T");
  EXPECT_EQ(j["children"][0]["schema_marker"], true);
  EXPECT_TRUE(j["children"][0]["edge_proof"].is_string());
}

TEST(Certificate, ParseErrors) {
  EXPECT_THROW(parse_certificate("{"), ParseError);
  EXPECT_THROW(parse_certificate("[]"), ParseError);
  json j = json::parse(serialize_certificate(build({1}, 0)));
  j["kind"] = "Sideways";
  EXPECT_THROW(parse_certificate(j.dump()), ParseError);
  j = json::parse(serialize_certificate(build({1}, 0)));
  j["children"][0]["edge_proof"] = "1. T ; NOPE\nGOAL T\n";
  EXPECT_THROW(parse_certificate(j.dump()), ParseError);
  j = json::parse(serialize_certificate(build({1}, 0)));
  j.erase("meta_theory");
  EXPECT_THROW(parse_certificate(j.dump()), ParseError);
}

TEST(VerifyCertificate, EdgeGoalMutation) {
  json j = json::parse(serialize_certificate(build({1}, 2)));
  Proof p = parse_proof(j["children"][1]["edge_proof"].get<std::string>());
  p.goal = Formula::neg(p.goal);
  j["children"][1]["edge_proof"] = print_proof(p);
  const auto e = verify_certificate(parse_certificate(j.dump()));
  ASSERT_TRUE(e);
  EXPECT_EQ(e->path, "root/1");
}

TEST(VerifyCertificate, DescentViolation) {
  // Relabel the child of <0><0>T with the parent's ordinal.
  Certificate c = build({0, 0}, 1);
  c.root.children[0].ordinal = c.root.ordinal;
  const auto e = verify_certificate(c);
  ASSERT_TRUE(e);
  EXPECT_EQ(e->path, "root/0");
}

TEST(VerifyCertificate, RootChecks) {
  Certificate c = build({1}, 1);
  c.root.edge_proof = c.root.children[0].edge_proof;
  EXPECT_TRUE(verify_certificate(c));
  c = build({1}, 1);
  c.root.formula = f("[0]T");
  EXPECT_TRUE(verify_certificate(c));
}

TEST(VerifyCertificate, RejectsEveryMutation) {
  std::vector<std::string> pool;
  for (auto w : {Worm::of({1}), Worm::of({0, 1}), Worm::of({2, 1}), Worm::of({1, 2}), Worm::of({0, 2, 0}),
                 Worm::of({1, 0, 1})}) {
    pool.push_back(serialize_certificate(build_certificate(w, 2, SymbolicGlpProvider{})));
  }
  testing::Rng rng(61);
  int mutations = 0;
  while (mutations < 200) {
    json j = json::parse(pool[testing::uniform(rng, 0, pool.size() - 1)]);
    if (!testing::mutate_certificate(j, rng)) continue;
    ++mutations;
    Certificate c;
    try {
      c = parse_certificate(j.dump());
    } catch (const ParseError&) {
      continue;  // rejected before verification
    }
    ASSERT_TRUE(verify_certificate(c).has_value()) << j.dump();
  }
}

// Re-derives the children through the public API and counts every call.
class CountingProvider : public Provider {
 public:
  mutable int shifts = 0, soundness = 0, coverages = 0, steps = 0;

  Formula deduction_shift(const ModalIndex& n, const Formula& phi, const Formula& psi) const override {
    ++shifts;
    return Formula::dia(n, Formula::conj(psi, phi));
  }
  bool glp_sound() const override {
    ++soundness;
    return true;
  }
  std::vector<Worm> coverage(std::size_t count) const override {
    ++coverages;
    return SymbolicGlpProvider{}.coverage(count);
  }
  std::optional<std::vector<EquiChild>> equi_step(const ModalIndex& n, const Formula& phi,
                                                  std::uint64_t K) const override {
    ++steps;
    std::vector<EquiChild> out;
    Formula q = Formula::dia(n, phi);
    for (std::uint64_t k = 0; k <= K; ++k) {
      out.push_back({normalize_top(q), derive_inclusion_dia(n, k, phi, ModalIndex::nat(0))});
      q = deduction_shift(n, q, phi);
    }
    return out;
  }
};

class RefusingProvider : public SymbolicGlpProvider {
 public:
  std::optional<std::vector<EquiChild>> equi_step(const ModalIndex&, const Formula&, std::uint64_t) const override {
    return std::nullopt;
  }
};

class UnsoundProvider : public SymbolicGlpProvider {
 public:
  bool glp_sound() const override { return false; }
};

class ForgingProvider : public SymbolicGlpProvider {
 public:
  std::optional<std::vector<EquiChild>> equi_step(const ModalIndex& n, const Formula& phi,
                                                  std::uint64_t K) const override {
    auto out = SymbolicGlpProvider::equi_step(n, phi, K);
    out->back().edge.goal = Formula::neg(out->back().edge.goal);
    return out;
  }
};

TEST(Provider, InstrumentedMockGivesSameShapes) {
  CountingProvider mock;
  for (const Worm& w : testing::enumerate_worms(2, 3)) {
    const Certificate a = build_certificate(w, kDefaultK, SymbolicGlpProvider{});
    const Certificate b = build_certificate(w, kDefaultK, mock);
    ASSERT_EQ(shape(a.root), shape(b.root)) << print_worm(w);
    ASSERT_FALSE(verify_certificate(b).has_value());
  }
  EXPECT_GT(mock.steps, 0);
  EXPECT_GT(mock.soundness, 0);
  EXPECT_EQ(mock.shifts, mock.steps * static_cast<int>(kDefaultK + 1));
}

TEST(Provider, EngineRejectsBadProviders) {
  EXPECT_THROW(build_certificate(Worm::of({1}), 1, RefusingProvider{}), DomainError);
  EXPECT_THROW(build_certificate(Worm::of({1}), 1, UnsoundProvider{}), DomainError);
  EXPECT_THROW(build_certificate(Worm::of({1}), 1, ForgingProvider{}), DomainError);
  EXPECT_NO_THROW(build_certificate(Worm::of({0, 0}), 1, RefusingProvider{}));
}

TEST(Provider, SymbolicCapabilities) {
  const SymbolicGlpProvider p;
  EXPECT_EQ(p.deduction_shift(ModalIndex::nat(1), f("<0>T"), f("<1>T")), f("<1>(<1>T & <0>T)"));
  EXPECT_EQ(p.coverage(3), (std::vector<Worm>{Worm::of({0}), Worm::of({1}), Worm::of({2})}));
  const auto step = p.equi_step(ModalIndex::nat(0), Formula::top(), 2);
  ASSERT_TRUE(step);
  for (std::uint64_t k = 0; k <= 2; ++k) EXPECT_EQ((*step)[k].formula, q_formula_normalized(ModalIndex::nat(0), k, Formula::top()));
}

TEST(TheorySpec, Parse) {
  const TheorySpec t = parse_theory_spec("# PA\n\nAXIOM <1>T   # comment\nSCHEMA offset=1\nAXIOM T\n");
  EXPECT_EQ(t.axioms, (std::vector<Worm>{Worm::of({1}), Worm()}));
  EXPECT_EQ(t.schemas, (std::vector<TheorySchema>{{1}}));
  try {
    parse_theory_spec("AXIOM T\nAXIOMS T\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.message().rfind("line 2:", 0), 0u);
  }
  EXPECT_THROW(parse_theory_spec("SCHEMA offset=x\n"), ParseError);
  EXPECT_THROW(parse_theory_spec("AXIOM [0]T\n"), ParseError);
  EXPECT_THROW(parse_theory_spec("AXIOM <w>T\n"), DomainError);
}

TEST(Pi1Ordinal, Anchors) {
  EXPECT_EQ(pi1_ordinal(TheorySpec{}), OrdinalBound::below(CnfOrdinal::zero()));
  EXPECT_EQ(pi1_ordinal(TheorySpec{{Worm::of({0})}, {}}), OrdinalBound::below(CnfOrdinal::natural(1)));
  EXPECT_EQ(pi1_ordinal(TheorySpec{{}, {{1}}}), OrdinalBound::epsilon_zero());
  EXPECT_EQ(pi1_ordinal(TheorySpec{{Worm::of({1}), Worm::of({0, 0})}, {}}), OrdinalBound::below(CnfOrdinal::omega()));
}

TEST(Pi1Ordinal, MonotoneInAxioms) {
  const auto worms = testing::enumerate_worms(2, 4);
  testing::Rng rng(62);
  for (int i = 0; i < 300; ++i) {
    TheorySpec t;
    for (std::uint64_t j = testing::uniform(rng, 0, 3); j > 0; --j) t.axioms.push_back(worms[testing::uniform(rng, 0, worms.size() - 1)]);
    if (testing::uniform(rng, 0, 9) == 0) t.schemas.push_back({testing::uniform(rng, 0, 2)});
    const OrdinalBound before = pi1_ordinal(t);
    TheorySpec more = t;
    more.axioms.push_back(worms[testing::uniform(rng, 0, worms.size() - 1)]);
    ASSERT_LE(before, pi1_ordinal(more));
    if (testing::uniform(rng, 0, 3) == 0) {
      more.schemas.push_back({0});
      ASSERT_EQ(pi1_ordinal(more), OrdinalBound::epsilon_zero());
    }
  }
}

}  // namespace
}  // namespace glp
