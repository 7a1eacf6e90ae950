#include "glp/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <unordered_map>

#include <json.hpp>

#include "glp/derivations.hpp"
#include "glp/error.hpp"
#include "glp/reduction.hpp"
#include "glp/worm_order.hpp"

namespace glp {

// ---------------------------------------------------------------------------
// Theory specs

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

TheorySpec parse_theory_spec(std::string_view text) {
  TheorySpec t;
  std::size_t physical = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++physical;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto where = [&](const std::string& msg) { return "line " + std::to_string(physical) + ": " + msg; };
    try {
      if (line.starts_with("AXIOM") && (line.size() == 5 || std::isspace(static_cast<unsigned char>(line[5])))) {
        Worm w = parse_worm(line.substr(5));
        (void)w.naturals();
        t.axioms.push_back(std::move(w));
      } else if (line.starts_with("SCHEMA")) {
        std::string_view rest = trim(line.substr(6));
        if (!rest.starts_with("offset=")) throw ParseError("expected 'SCHEMA offset=<nat>'", 0);
        rest = trim(rest.substr(7));
        std::uint64_t offset = 0;
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), offset);
        if (rest.empty() || ec != std::errc{} || ptr != rest.data() + rest.size()) {
          throw ParseError("bad schema offset '" + std::string(rest) + "'", 0);
        }
        t.schemas.push_back({offset});
      } else {
        throw ParseError("expected AXIOM or SCHEMA", 0);
      }
    } catch (const ParseError& e) {
      throw ParseError(where(e.message()), e.position());
    } catch (const DomainError& e) {
      throw DomainError(where(e.what()));
    }
  }
  return t;
}

OrdinalBound pi1_ordinal(const TheorySpec& t) {
  if (!t.schemas.empty()) return OrdinalBound::epsilon_zero();
  CnfOrdinal sup;
  for (const Worm& w : t.axioms) sup = std::max(sup, worm_ordinal(w));
  return OrdinalBound::below(sup);
}

// ---------------------------------------------------------------------------
// Provider

Formula SymbolicGlpProvider::deduction_shift(const ModalIndex& n, const Formula& phi, const Formula& psi) const {
  return Formula::dia(n, Formula::conj(psi, phi));
}

std::vector<Worm> SymbolicGlpProvider::coverage(std::size_t count) const {
  std::vector<Worm> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(Worm::of({i}));
  return out;
}

std::optional<std::vector<EquiChild>> SymbolicGlpProvider::equi_step(const ModalIndex& n, const Formula& phi,
                                                                     std::uint64_t K) const {
  const Formula parent = Formula::dia(n.successor(), phi);
  std::vector<EquiChild> out;
  // Q^{k+1}_n(phi) is <n>_{X + Q^k} phi.
  Formula q = Formula::dia(n, phi);
  for (std::uint64_t k = 0; k <= K; ++k) {
    const Formula child = normalize_top(q);
    Proof edge = derive_inclusion_dia(n, k, phi, ModalIndex::nat(0));
    edge.goal = Formula::imp(parent, Formula::dia(0, child));
    out.push_back({child, std::move(edge)});
    q = deduction_shift(n, q, phi);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Certificates

std::string to_string(NodeKind k) {
  switch (k) {
    case NodeKind::Leaf: return "Leaf";
    case NodeKind::SuccessorStep: return "SuccessorStep";
    case NodeKind::ReductionStep: return "ReductionStep";
    case NodeKind::Boundary: return "Boundary";
  }
  return "?";
}

std::optional<NodeKind> node_kind_from_string(std::string_view s) {
  for (NodeKind k : {NodeKind::Leaf, NodeKind::SuccessorStep, NodeKind::ReductionStep, NodeKind::Boundary}) {
    if (s == to_string(k)) return k;
  }
  return std::nullopt;
}

namespace {

Worm tail(const Worm& w) { return Worm(std::vector<ModalIndex>(w.indices().begin() + 1, w.indices().end())); }

Formula edge_goal(const Formula& parent, const Formula& child) {
  return Formula::imp(parent, Formula::dia(0, child));
}

class Builder {
 public:
  Builder(std::uint64_t K, const Provider& provider) : K_(K), provider_(provider) {}

  CertificateNode expand(const Worm& w) {
    const std::string key = print_worm(w);
    if (auto it = done_.find(key); it != done_.end()) return it->second;
    CertificateNode node = expand_uncached(w);
    done_.emplace(key, node);
    return node;
  }

 private:
  CertificateNode expand_uncached(const Worm& w) {
    (void)w.naturals();
    CertificateNode node;
    node.formula = w.to_formula();
    node.ordinal = worm_ordinal(w);
    if (w.empty()) {
      node.kind = NodeKind::Leaf;
      return node;
    }
    const ModalIndex& head = w.indices().front();
    const Worm rest = tail(w);
    if (head == ModalIndex::nat(0)) {
      node.kind = NodeKind::SuccessorStep;
      CertificateNode child = expand(rest);
      const Formula goal = edge_goal(node.formula, child.formula);
      child.edge_proof = Proof{{ProofLine{goal, PropTaut{}}}, goal};
      node.children.push_back(std::move(child));
      return node;
    }
    node.kind = NodeKind::ReductionStep;
    node.schema_marker = true;
    const ModalIndex n = ModalIndex::nat(*head.natural() - 1);
    auto step = provider_.equi_step(n, rest.to_formula(), K_);
    if (!step) throw DomainError("provider refused the reduction step at " + print_worm(w));
    for (EquiChild& c : *step) {
      const Formula goal = edge_goal(node.formula, c.formula);
      if (!check_proof(c.edge).ok() || !(canonical_form(c.edge.goal) == canonical_form(goal))) {
        throw DomainError("provider supplied an invalid edge proof at " + print_worm(w));
      }
      CertificateNode child;
      if (auto cw = as_worm(c.formula)) {
        child = expand(*cw);
        child.formula = c.formula;
      } else {
        child.formula = c.formula;
        child.kind = NodeKind::Boundary;
      }
      child.edge_proof = std::move(c.edge);
      node.children.push_back(std::move(child));
    }
    return node;
  }

  std::uint64_t K_;
  const Provider& provider_;
  std::unordered_map<std::string, CertificateNode> done_;
};

class Verifier {
 public:
  std::optional<CertificateError> run(const Certificate& c) {
    if (c.root.edge_proof) return fail("root", "root carries an edge proof");
    if (!as_worm(c.root.formula)) return fail("root", "root is not a worm");
    return node(c.root, "root");
  }

 private:
  static std::optional<CertificateError> fail(const std::string& path, std::string reason) {
    return CertificateError{path, std::move(reason)};
  }

  std::optional<CertificateError> node(const CertificateNode& n, const std::string& path) {
    if (n.meta_theory != kMetaTheory) return fail(path, "meta_theory must be '" + std::string(kMetaTheory) + "'");
    const auto w = as_worm(n.formula);

    std::vector<Formula> expected;  // child formulas the node kind demands
    NodeKind kind = NodeKind::Boundary;
    bool marker = false;
    bool open_ended = false;
    if (w) {
      CnfOrdinal o;
      try {
        o = worm_ordinal(*w);
      } catch (const DomainError&) {
        return fail(path, "transfinite index in a worm node");
      }
      if (!n.ordinal || !(*n.ordinal == o)) return fail(path, "ordinal label differs from o(worm) = " + print_ordinal(o));
      if (w->empty()) {
        kind = NodeKind::Leaf;
      } else if (w->indices().front() == ModalIndex::nat(0)) {
        kind = NodeKind::SuccessorStep;
        expected.push_back(tail(*w).to_formula());
      } else {
        kind = NodeKind::ReductionStep;
        marker = true;
        open_ended = true;
        const ModalIndex m = ModalIndex::nat(*w->indices().front().natural() - 1);
        for (std::size_t k = 0; k < n.children.size(); ++k) {
          expected.push_back(q_formula_normalized(m, k, tail(*w).to_formula()));
        }
      }
    } else if (n.ordinal) {
      return fail(path, "ordinal label on a non-worm node");
    }
    if (n.kind != kind) return fail(path, "node kind " + to_string(n.kind) + " does not match formula, expected " + to_string(kind));
    if (n.schema_marker != marker) return fail(path, marker ? "missing schema marker" : "unexpected schema marker");
    if (open_ended ? n.children.empty() : n.children.size() != expected.size()) {
      return fail(path, "wrong number of children");
    }

    for (std::size_t i = 0; i < n.children.size(); ++i) {
      const CertificateNode& c = n.children[i];
      const std::string cpath = path + "/" + std::to_string(i);
      if (!(normalize_top(c.formula) == normalize_top(expected[i]))) {
        return fail(cpath, "child formula is not " + print_formula(expected[i]));
      }
      if (!c.edge_proof) return fail(cpath, "missing edge proof");
      const CheckResult r = check_proof(*c.edge_proof);
      if (!r.ok()) {
        return fail(cpath, "edge proof rejected at line " + std::to_string(r.error->line) + ": " + r.error->reason);
      }
      if (!(canonical_form(c.edge_proof->goal) == canonical_form(edge_goal(n.formula, c.formula)))) {
        return fail(cpath, "edge proof does not prove parent -> <0>child");
      }
      if (n.ordinal && c.ordinal && !(*c.ordinal < *n.ordinal)) {
        return fail(cpath, "ordinal label does not descend");
      }
      if (auto e = node(c, cpath)) return e;
    }
    return std::nullopt;
  }
};

using nlohmann::json;

json node_to_json(const CertificateNode& n) {
  json j;
  j["root"] = print_formula(n.formula);
  j["kind"] = to_string(n.kind);
  j["ordinal"] = n.ordinal ? json(print_ordinal(*n.ordinal)) : json(nullptr);
  j["schema_marker"] = n.schema_marker;
  j["meta_theory"] = n.meta_theory;
  j["edge_proof"] = n.edge_proof ? json(print_proof(*n.edge_proof)) : json(nullptr);
  j["children"] = json::array();
  for (const auto& c : n.children) j["children"].push_back(node_to_json(c));
  return j;
}

const json& field(const json& j, const char* name, const std::string& path) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(path + ": missing field '" + name + "'", 0);
  return j.at(name);
}

CertificateNode node_from_json(const json& j, const std::string& path) {
  CertificateNode n;
  const json& root = field(j, "root", path);
  const json& kind = field(j, "kind", path);
  const json& ordinal = field(j, "ordinal", path);
  const json& marker = field(j, "schema_marker", path);
  const json& meta = field(j, "meta_theory", path);
  const json& edge = field(j, "edge_proof", path);
  const json& children = field(j, "children", path);
  auto bad = [&](const char* what) { return ParseError(path + ": field '" + what + "' has the wrong type", 0); };
  if (!root.is_string()) throw bad("root");
  if (!kind.is_string()) throw bad("kind");
  if (!ordinal.is_string() && !ordinal.is_null()) throw bad("ordinal");
  if (!marker.is_boolean()) throw bad("schema_marker");
  if (!meta.is_string()) throw bad("meta_theory");
  if (!edge.is_string() && !edge.is_null()) throw bad("edge_proof");
  if (!children.is_array()) throw bad("children");
  try {
    n.formula = parse_formula(root.get<std::string>());
    auto k = node_kind_from_string(kind.get<std::string>());
    if (!k) throw ParseError("unknown node kind '" + kind.get<std::string>() + "'", 0);
    n.kind = *k;
    if (ordinal.is_string()) n.ordinal = parse_ordinal(ordinal.get<std::string>());
    n.schema_marker = marker.get<bool>();
    n.meta_theory = meta.get<std::string>();
    if (edge.is_string()) n.edge_proof = parse_proof(edge.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.message(), e.position());
  }
  for (std::size_t i = 0; i < children.size(); ++i) {
    n.children.push_back(node_from_json(children[i], path + "/" + std::to_string(i)));
  }
  return n;
}

std::size_t count_nodes(const CertificateNode& n) {
  std::size_t s = 1;
  for (const auto& c : n.children) s += count_nodes(c);
  return s;
}

}  // namespace

Certificate build_certificate(const Worm& root, std::uint64_t K, const Provider& provider) {
  if (!provider.glp_sound()) throw DomainError("provider does not attest GLP soundness");
  return Certificate{Builder(K, provider).expand(root)};
}

std::optional<CertificateError> verify_certificate(const Certificate& c) { return Verifier().run(c); }

std::string serialize_certificate(const Certificate& c) { return node_to_json(c.root).dump(2) + "\n"; }

Certificate parse_certificate(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
  return Certificate{node_from_json(j, "root")};
}

std::size_t certificate_size(const Certificate& c) { return count_nodes(c.root); }

}  // namespace glp
