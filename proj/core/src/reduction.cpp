#include "glp/reduction.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <unordered_map>

#include "lemmas.hpp"

namespace glp {

Formula q_formula(const ModalIndex& n, std::uint64_t k, const Formula& phi) {
  Formula q = Formula::dia(n, phi);
  for (std::uint64_t j = 0; j < k; ++j) q = Formula::dia(n, Formula::conj(phi, q));
  return q;
}

Formula q_formula_normalized(const ModalIndex& n, std::uint64_t k, const Formula& phi) {
  return normalize_top(q_formula(n, k, phi));
}

bool n_stable(const Formula& psi, const ModalIndex& n) {
  switch (psi.kind()) {
    case FormulaKind::Top:
    case FormulaKind::Bottom:
      return true;
    case FormulaKind::Dia: return psi.index() < n;
    case FormulaKind::And:
    case FormulaKind::Or:
      return n_stable(psi.lhs(), n) && n_stable(psi.rhs(), n);
    default: return false;
  }
}

Proof collapse_rule(const ModalIndex& n, const ModalIndex& m_marker, const Formula& phi,
                    const Formula& psi) {
  if (m_marker > n) throw DomainError("collapse requires m <= n");
  if (!n_stable(psi, n)) {
    throw DomainError("stability of " + print_formula(psi) + " at level " + print_index(n) +
                      " not certified");
  }
  ProofBuilder b;
  auto stable = lemma::stability(b, psi, n);
  Proof p = b.extract(lemma::absorb_stable(b, n, *stable, psi, phi, true));
  p.goal = Formula::imp(Formula::conj(Formula::dia(n, phi), psi), Formula::dia(n, Formula::conj(psi, phi)));
  return p;
}

std::vector<Formula> equi_children(const ModalIndex& m, const ModalIndex& n, const Formula& phi,
                                   std::uint64_t K) {
  if (m > n) throw DomainError("equi_children requires m <= n");
  std::vector<Formula> out;
  for (std::uint64_t k = 0; k <= K; ++k) out.push_back(Formula::dia(m, q_formula(n, k, phi)));
  return out;
}

Proof equi_child_witness(const ModalIndex& m, const ModalIndex& n, const Formula& phi, std::uint64_t k) {
  if (m > n) throw DomainError("equi_children requires m <= n");
  ProofBuilder b;
  Proof p = b.extract(lemma::dia_mono(b, m, lemma::inclusion(b, n, k, phi)));
  p.goal = Formula::imp(Formula::dia(m, Formula::dia(n.successor(), phi)), Formula::dia(m, q_formula(n, k, phi)));
  return p;
}

// ---------------------------------------------------------------------------
// Rule elimination. A step whose premise is a theorem needs Q^0; a premise
// that depends on conclusions of level at most L needs Q^{L+1}.

namespace {

using lemma::Line;

Formula implication_chain(const std::vector<Formula>& premises, Formula c) {
  for (auto it = premises.rbegin(); it != premises.rend(); ++it) c = Formula::imp(*it, c);
  return c;
}

class Eliminator {
 public:
  explicit Eliminator(const RuleDerivation& d) : d_(d) {}

  Elimination run() {
    for (std::size_t i = 0; i < d_.base_axioms.size(); ++i) {
      const auto matches = match_axiom(d_.base_axioms[i]);
      if (matches.empty()) {
        throw DerivationError(0, "base axiom " + std::to_string(i + 1) + " is not a GLP axiom instance");
      }
      bases_.push_back(b_.axiom(d_.base_axioms[i], matches.front()));
    }
    for (std::size_t i = 0; i < d_.steps.size(); ++i) step(i);

    auto [level, line] = derive(d_.conclusion, d_.steps.size(), 0, "conclusion");
    if (level < 0) {
      line = lemma::chain(b_, {line}, Formula::imp(q(0), d_.conclusion));
      level = 0;
    }
    Proof p = b_.extract(line);
    p.goal = Formula::imp(q(level), d_.conclusion);
    return {static_cast<std::uint64_t>(level), std::move(p)};
  }

 private:
  struct Derived {
    int level;  // -1: Line proves the formula outright; else Q^level -> formula
    Line line;
  };

  Formula q(int level) const { return q_formula(d_.n, static_cast<std::uint64_t>(level), d_.phi); }

  void step(std::size_t i) {
    const RuleStep& s = d_.steps[i];
    const Formula shape = Formula::dia(d_.n, Formula::conj(s.premise, d_.phi));
    if (!(normalize_top(s.conclusion) == normalize_top(shape))) {
      throw DerivationError(i + 1, "step " + std::to_string(i + 1) + " is not of rule shape <n>(premise & phi)");
    }
    auto [level, line] = derive(s.premise, i, i + 1, "premise of step " + std::to_string(i + 1));
    const Formula target = Formula::conj(s.premise, d_.phi);
    Line inner;
    if (level < 0) {
      inner = lemma::chain(b_, {line}, Formula::imp(d_.phi, target));
    } else {
      inner = lemma::chain(b_, {line}, Formula::imp(Formula::conj(d_.phi, q(level)), target));
    }
    Line dm = lemma::dia_mono(b_, d_.n, inner);
    const int out = level + 1;
    concl_.push_back({out, lemma::chain(b_, {dm}, Formula::imp(q(out), s.conclusion))});
  }

  // `f` from the base axioms alone, or from them and the conclusions of
  // the first `upto` steps.
  Derived derive(const Formula& f, std::size_t upto, std::size_t step_no, const std::string& what) {
    std::vector<Formula> base_formulas = d_.base_axioms;
    if (is_tautology(implication_chain(base_formulas, f))) return {-1, lemma::chain(b_, bases_, f)};

    std::vector<Formula> hyps = base_formulas;
    for (std::size_t j = 0; j < upto; ++j) hyps.push_back(d_.steps[j].conclusion);
    if (upto == 0 || !is_tautology(implication_chain(hyps, f))) {
      throw DerivationError(step_no, what + " does not follow from the base axioms and earlier conclusions");
    }
    int level = 0;
    for (std::size_t j = 0; j < upto; ++j) level = std::max(level, concl_[j].level);

    std::vector<Line> premises = bases_;
    for (std::size_t j = 0; j < upto; ++j) premises.push_back(lift(concl_[j], level, d_.steps[j].conclusion));
    return {level, lemma::chain(b_, premises, Formula::imp(q(level), f))};
  }

  // Q^{l+1} -> Q^l.
  Line descend(int l) {
    if (auto it = descend_.find(l); it != descend_.end()) return it->second;
    const Formula inner = l == 0 ? d_.phi : Formula::conj(d_.phi, q(l - 1));
    Line dm = lemma::dia_mono(b_, d_.n, b_.taut(Formula::imp(Formula::conj(d_.phi, q(l)), q(l))));
    Line fo = lemma::four(b_, d_.n, inner);
    Line r = lemma::chain(b_, {dm, fo}, Formula::imp(q(l + 1), q(l)));
    descend_.emplace(l, r);
    return r;
  }

  Line lift(const Derived& c, int level, const Formula& f) {
    std::vector<Line> premises;
    for (int l = level - 1; l >= c.level; --l) premises.push_back(descend(l));
    premises.push_back(c.line);
    return lemma::chain(b_, premises, Formula::imp(q(level), f));
  }

  const RuleDerivation& d_;
  ProofBuilder b_;
  std::vector<Line> bases_;
  std::vector<Derived> concl_;
  std::unordered_map<int, Line> descend_;
};

}  // namespace

Elimination eliminate_rule(const RuleDerivation& d) { return Eliminator(d).run(); }

// ---------------------------------------------------------------------------
// Text format

std::string print_rule_derivation(const RuleDerivation& d) {
  std::string out;
  std::vector<Formula> lines;
  auto emit = [&](const Formula& f, const std::string& just) {
    lines.push_back(f);
    out += std::to_string(lines.size()) + ". " + print_formula(f) + " ; " + just + "\n";
    return lines.size();
  };
  for (const Formula& b : d.base_axioms) emit(b, "BASE");
  for (const RuleStep& s : d.steps) {
    std::size_t premise = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (lines[i] == s.premise) premise = i + 1;
    }
    if (premise == 0) {
      std::string refs;
      for (std::size_t i = 1; i <= lines.size(); ++i) refs += (i > 1 ? "," : "") + std::to_string(i);
      premise = emit(s.premise, "PROP(" + refs + ")");
    }
    emit(s.conclusion, "RR(" + std::to_string(premise) + "," + print_index(d.n) + "," + print_formula(d.phi) + ")");
  }
  out += "GOAL " + print_formula(d.conclusion) + "\n";
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t read_number(std::string_view s) {
  s = trim(s);
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("bad line number '" + std::string(s) + "'", 0);
  }
  return v;
}

}  // namespace

RuleDerivation parse_rule_derivation(std::string_view text) {
  RuleDerivation d;
  std::vector<Formula> lines;
  std::optional<std::pair<ModalIndex, Formula>> rule;
  bool have_goal = false;
  std::size_t physical = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++physical;
    if (line.empty()) continue;
    auto where = [&](const std::string& msg) { return "line " + std::to_string(physical) + ": " + msg; };
    try {
      if (have_goal) throw ParseError("content after GOAL", 0);
      if (line.starts_with("GOAL")) {
        d.conclusion = parse_formula(line.substr(4));
        have_goal = true;
        continue;
      }
      const auto dot = line.find('.');
      const auto semi = line.find(';');
      if (dot == std::string_view::npos || semi == std::string_view::npos || semi < dot) {
        throw ParseError("expected 'n. <formula> ; <justification>'", 0);
      }
      if (read_number(line.substr(0, dot)) != lines.size() + 1) {
        throw ParseError("line numbers must be consecutive from 1", 0);
      }
      const Formula f = parse_formula(line.substr(dot + 1, semi - dot - 1));
      const std::string_view just = trim(line.substr(semi + 1));
      auto args_of = [&](std::string_view name) {
        if (!just.starts_with(name) || just.size() < name.size() + 2 || just[name.size()] != '(' ||
            just.back() != ')') {
          return std::optional<std::string_view>{};
        }
        return std::optional<std::string_view>{just.substr(name.size() + 1, just.size() - name.size() - 2)};
      };
      auto earlier = [&](std::string_view s) {
        const std::size_t ref = read_number(s);
        if (ref < 1 || ref > lines.size()) throw ParseError("reference to line " + std::to_string(ref) + " is not earlier", 0);
        return ref;
      };
      if (just == "BASE") {
        if (!d.steps.empty()) throw ParseError("BASE lines must precede rule steps", 0);
        d.base_axioms.push_back(f);
      } else if (auto args = args_of("PROP")) {
        std::string_view rest = *args;
        while (!trim(rest).empty()) {
          const auto comma = rest.find(',');
          earlier(rest.substr(0, comma));
          rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        }
      } else if (auto args = args_of("RR")) {
        const auto c1 = args->find(',');
        const auto c2 = c1 == std::string_view::npos ? c1 : args->find(',', c1 + 1);
        if (c2 == std::string_view::npos) throw ParseError("RR expects (line,n,phi)", 0);
        const std::size_t p = earlier(args->substr(0, c1));
        ModalIndex n(parse_ordinal(trim(args->substr(c1 + 1, c2 - c1 - 1))));
        Formula phi = parse_formula(args->substr(c2 + 1));
        if (!rule) {
          rule.emplace(n, phi);
        } else if (!(rule->first == n) || !(rule->second == phi)) {
          throw DerivationError(d.steps.size() + 1, where("all rule steps must use the same RR(n, phi)"));
        }
        d.steps.push_back({lines[p - 1], f});
      } else {
        throw ParseError("unknown justification '" + std::string(just) + "'", 0);
      }
      lines.push_back(f);
    } catch (const ParseError& e) {
      throw ParseError(where(e.message()), e.position());
    }
  }
  if (!have_goal) throw ParseError("missing GOAL line", 0);
  if (rule) {
    d.n = rule->first;
    d.phi = rule->second;
  }
  return d;
}

}  // namespace glp
