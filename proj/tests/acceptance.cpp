// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <bitset>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "glp/analysis.hpp"
#include "glp/derivations.hpp"
#include "glp/proof.hpp"
#include "glp/reduction.hpp"
#include "glp/worm_order.hpp"
#include "support/generators.hpp"
#include "support/mutations.hpp"

namespace {

using namespace glp;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

constexpr std::size_t kWorms = 1093;
const std::vector<Worm>& worms() {
  static const auto w = testing::enumerate_worms(2, 6);
  return w;
}

Outcome well_order() {
  const auto start = Clock::now();
  const auto& w = worms();
  if (w.size() != kWorms) return {false, "enumeration has " + std::to_string(w.size()) + " worms"};
  std::vector<std::bitset<kWorms>> lt(kWorms), eq(kWorms);
  for (std::size_t i = 0; i < kWorms; ++i) {
    for (std::size_t j = 0; j < kWorms; ++j) {
      const Cmp c = worm_cmp(w[i], w[j]);
      lt[i][j] = c == Cmp::LT;
      eq[i][j] = c == Cmp::EQ;
    }
  }
  for (std::size_t i = 0; i < kWorms; ++i) {
    if (lt[i][i]) return {false, "irreflexivity fails at " + print_worm(w[i])};
    for (std::size_t j = 0; j < kWorms; ++j) {
      if (int(lt[i][j]) + int(lt[j][i]) + int(eq[i][j]) != 1) {
        return {false, "trichotomy fails at " + print_worm(w[i]) + ", " + print_worm(w[j])};
      }
      // Row i holds the worms above w[i]; i < j needs row j inside row i.
      if (lt[i][j] && (lt[j] & ~lt[i]).any()) {
        return {false, "transitivity fails through " + print_worm(w[i]) + " < " + print_worm(w[j])};
      }
    }
  }
  const double t = seconds_since(start);
  return {t < 10.0, std::to_string(kWorms) + " worms, " + std::to_string(t) + " s (limit 10 s)"};
}

Outcome isomorphism() {
  const auto& w = worms();
  std::vector<CnfOrdinal> o;
  for (const auto& x : w) o.push_back(worm_ordinal(x));
  std::size_t pairs = 0, bad = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      const Cmp a = worm_cmp(w[i], w[j]);
      const Cmp b = worm_cmp_structural(w[i], w[j]);
      const Cmp c = ord_cmp(o[i], o[j]);
      ++pairs;
      if (a != b || b != c) ++bad;
    }
  }
  return {bad == 0, std::to_string(pairs) + " pairs, " + std::to_string(bad) + " disagreements"};
}

Outcome round_trip() {
  testing::Rng rng(1001);
  for (int i = 0; i < 500; ++i) {
    const CnfOrdinal a = testing::random_ordinal_below_www(rng);
    if (!(worm_ordinal(worm_of_ordinal(a)) == a)) return {false, "fails at " + print_ordinal(a)};
  }
  return {true, "500 ordinals below w^w^w"};
}

Outcome inclusion() {
  const auto start = Clock::now();
  int cases = 0;
  for (std::uint64_t a = 0; a <= 2; ++a) {
    for (std::uint64_t k = 0; k <= 5; ++k) {
      for (const Formula& phi : {Formula::top(), Formula::dia(0, Formula::top())}) {
        const ModalIndex alpha = ModalIndex::nat(a);
        const Proof p = derive_inclusion(alpha, k, phi);
        const Formula goal = Formula::imp(Formula::dia(a + 1, phi), q_formula(alpha, k, phi));
        if (!check_proof(p).ok() || !(p.goal == goal)) return {false, "fails at " + print_formula(goal)};
        ++cases;
      }
    }
  }
  const double t = seconds_since(start);
  return {t < 5.0, std::to_string(cases) + " cases, " + std::to_string(t) + " s (limit 5 s)"};
}

Outcome elimination() {
  testing::Rng rng(1005);
  for (int i = 0; i < 100; ++i) {
    const RuleDerivation d = testing::random_rule_derivation(rng, 5);
    try {
      const Elimination e = eliminate_rule(d);
      if (e.k > d.steps.size()) return {false, "k exceeds the step count for derivation " + std::to_string(i)};
      if (!check_proof(e.proof).ok() || !(e.proof.goal == Formula::imp(q_formula(d.n, e.k, d.phi), d.conclusion))) {
        return {false, "proof rejected for derivation " + std::to_string(i)};
      }
    } catch (const DerivationError& e) {
      return {false, "derivation " + std::to_string(i) + ": " + e.what()};
    }
  }
  return {true, "100 derivations"};
}

Outcome q_chain() {
  int proofs = 0;
  for (std::uint64_t n = 0; n <= 2; ++n) {
    const Worm top = Worm::of({n + 1});
    for (std::uint64_t k = 0; k <= 5; ++k) {
      const Worm qk = *as_worm(q_formula(ModalIndex::nat(n), k, Formula::top()));
      const Worm next = *as_worm(q_formula(ModalIndex::nat(n), k + 1, Formula::top()));
      for (const Worm* above : {&next, &top}) {
        auto p = certify_less(qk, *above, kDefaultSearchDepth);
        if (!p || !check_proof(*p).ok()) {
          return {false, "no checked proof of " + print_worm(qk) + " <0 " + print_worm(*above)};
        }
        ++proofs;
      }
    }
  }
  return {true, std::to_string(proofs) + " checked proofs"};
}

Outcome certificates() {
  const auto w = testing::enumerate_worms(2, 4);
  std::vector<std::string> serialized;
  for (const Worm& x : w) {
    const Certificate c = build_certificate(x, kDefaultK, SymbolicGlpProvider{});
    if (auto e = verify_certificate(c)) return {false, print_worm(x) + ": " + e->path + ": " + e->reason};
    serialized.push_back(serialize_certificate(c));
  }
  testing::Rng rng(1007);
  int mutations = 0;
  while (mutations < 200) {
    nlohmann::json j = nlohmann::json::parse(serialized[testing::uniform(rng, 0, serialized.size() - 1)]);
    if (!testing::mutate_certificate(j, rng)) continue;
    ++mutations;
    try {
      if (!verify_certificate(parse_certificate(j.dump()))) return {false, "mutation accepted: " + j.dump()};
    } catch (const ParseError&) {
      // rejected while reading
    }
  }
  return {true, std::to_string(w.size()) + " certificates, 200 mutations rejected"};
}

Outcome pi1_anchors() {
  const bool ok = pi1_ordinal(TheorySpec{}) == OrdinalBound::below(CnfOrdinal::zero()) &&
                  pi1_ordinal(TheorySpec{{Worm::of({0})}, {}}) == OrdinalBound::below(CnfOrdinal::natural(1)) &&
                  pi1_ordinal(TheorySpec{{}, {{1}}}) == OrdinalBound::epsilon_zero();
  return {ok, "Below(0), Below(1), e0"};
}

Outcome ordinal_properties() {
  testing::Rng rng(1009);
  for (int i = 0; i < 1000; ++i) {
    const CnfOrdinal a = testing::random_ordinal(rng, 2), b = testing::random_ordinal(rng, 2),
                     c = testing::random_ordinal(rng, 2);
    const CnfOrdinal ab = ord_add(a, b), bc = ord_add(b, c), l = ord_add(ab, c), r = ord_add(a, bc);
    for (const auto* v : {&ab, &bc, &l, &r}) {
      if (!is_valid_cnf(*v)) return {false, "invalid CNF produced at triple " + std::to_string(i)};
    }
    if (!(l == r)) return {false, "associativity fails at triple " + std::to_string(i)};
    const auto [lo, hi] = a < b ? std::pair{a, b} : std::pair{b, a};
    if (lo < hi) {
      const CnfOrdinal wl = omega_power(lo), wh = omega_power(hi);
      if (!is_valid_cnf(wl) || !is_valid_cnf(wh)) return {false, "invalid CNF from omega_power"};
      if (!(ord_add(c, lo) < ord_add(c, hi))) return {false, "right strict monotonicity fails"};
      if (!(ord_add(lo, c) <= ord_add(hi, c))) return {false, "left weak monotonicity fails"};
      if (!(wl < wh)) return {false, "omega_power monotonicity fails"};
    }
  }
  return {true, "1000 triples"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"well-order", well_order},     {"isomorphism", isomorphism},     {"round-trip", round_trip},
      {"inclusion", inclusion},       {"rule-elimination", elimination}, {"q-chain", q_chain},
      {"certificates", certificates}, {"pi1-anchors", pi1_anchors},     {"ordinal-arithmetic", ordinal_properties},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
