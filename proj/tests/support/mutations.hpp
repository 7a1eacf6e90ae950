#pragma once

// Single-point mutations of proofs and serialized certificates. Every
// mutation here is one that no valid object survives, so a checker must
// reject all of them.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "glp/proof.hpp"
#include "support/generators.hpp"

namespace glp::testing {

inline std::optional<Proof> mutate_proof(const Proof& p, Rng& rng) {
  Proof m = p;
  const std::size_t i = uniform(rng, 0, p.lines.size() - 1);
  ProofLine& line = m.lines[i];
  switch (uniform(rng, 0, 6)) {
    case 0: line.formula = Formula::neg(line.formula); return m;
    case 1: m.goal = Formula::neg(m.goal); return m;
    case 2:
      if (auto* mp = std::get_if<ModusPonens>(&line.justification)) {
        mp->minor = i + 1;  // points at itself
        return m;
      }
      return std::nullopt;
    case 3:
      if (auto* mp = std::get_if<ModusPonens>(&line.justification); mp && mp->minor != mp->major) {
        std::swap(mp->minor, mp->major);
        return m;
      }
      return std::nullopt;
    case 4:
      if (auto* nec = std::get_if<Necessitation>(&line.justification)) {
        nec->index = nec->index.successor();
        return m;
      }
      return std::nullopt;
    case 5:
      if (auto* mono = std::get_if<AxiomMono>(&line.justification); mono && mono->low < mono->high) {
        std::swap(mono->low, mono->high);
        return m;
      }
      return std::nullopt;
    default:
      if (auto* k = std::get_if<AxiomK>(&line.justification)) {
        k->index = k->index.successor();
        return m;
      }
      if (auto* l = std::get_if<AxiomLoeb>(&line.justification)) {
        l->index = l->index.successor();
        return m;
      }
      if (auto* n = std::get_if<AxiomNegIntro>(&line.justification)) {
        n->high = n->high.successor();
        return m;
      }
      return std::nullopt;
  }
}

namespace detail {
inline void collect_nodes(nlohmann::json& j, std::vector<nlohmann::json*>& out) {
  out.push_back(&j);
  for (auto& c : j["children"]) collect_nodes(c, out);
}
}  // namespace detail

/// Mutates one field of one node of a serialized certificate. Returns false
/// when the drawn mutation does not apply to the drawn node.
inline bool mutate_certificate(nlohmann::json& root, Rng& rng) {
  std::vector<nlohmann::json*> nodes;
  detail::collect_nodes(root, nodes);
  nlohmann::json& n = *nodes[uniform(rng, 0, nodes.size() - 1)];
  const bool is_root = &n == &root;
  switch (uniform(rng, 0, 7)) {
    case 0:
      if (n["ordinal"].is_null()) {
        n["ordinal"] = "0";
      } else {
        n["ordinal"] = print_ordinal(ord_add(parse_ordinal(n["ordinal"].get<std::string>()), CnfOrdinal::natural(1)));
      }
      return true;
    case 1: {
      static const char* const kinds[] = {"Leaf", "SuccessorStep", "ReductionStep", "Boundary"};
      const std::string was = n["kind"];
      std::string now = was;
      while (now == was) now = kinds[uniform(rng, 0, 3)];
      n["kind"] = now;
      return true;
    }
    case 2: n["schema_marker"] = !n["schema_marker"].get<bool>(); return true;
    case 3: n["meta_theory"] = "PA-strength"; return true;
    case 4:
      if (is_root) return false;
      n["edge_proof"] = nullptr;
      return true;
    case 5: {
      if (is_root) return false;
      Proof p = parse_proof(n["edge_proof"].get<std::string>());
      auto& line = p.lines[uniform(rng, 0, p.lines.size() - 1)];
      line.formula = Formula::neg(line.formula);
      n["edge_proof"] = print_proof(p);
      return true;
    }
    case 6: n["root"] = print_formula(Formula::dia(0, parse_formula(n["root"].get<std::string>()))); return true;
    default:
      if (is_root) {
        n["edge_proof"] = "1. T ; TAUT\nGOAL T\n";
        return true;
      }
      if (n["kind"] == "SuccessorStep") {
        n["children"].clear();
        return true;
      }
      return false;
  }
}

}  // namespace glp::testing
