#include "glp/proof.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <type_traits>
#include <unordered_map>

#include "glp/error.hpp"

namespace glp {

namespace {

Formula neg_canonical(const Formula& f) { return f.is(FormulaKind::Neg) ? f.lhs() : Formula::neg(f); }

}  // namespace

Formula canonical_form(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Top:
    case FormulaKind::Bottom:
      return f;
    case FormulaKind::Neg: return neg_canonical(canonical_form(f.lhs()));
    case FormulaKind::And: {
      Formula a = canonical_form(f.lhs());
      Formula b = canonical_form(f.rhs());
      if (a.is(FormulaKind::Top)) return b;
      if (b.is(FormulaKind::Top)) return a;
      return Formula::conj(a, b);
    }
    case FormulaKind::Or: return Formula::disj(canonical_form(f.lhs()), canonical_form(f.rhs()));
    case FormulaKind::Imp: return Formula::imp(canonical_form(f.lhs()), canonical_form(f.rhs()));
    case FormulaKind::Box: return Formula::box(f.index(), canonical_form(f.lhs()));
    case FormulaKind::Dia:
      return Formula::neg(Formula::box(f.index(), neg_canonical(canonical_form(f.lhs()))));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Tautologies over boxed atoms, by bit-parallel truth tables.

namespace {

class TruthTable {
 public:
  using Bits = std::vector<std::uint64_t>;

  explicit TruthTable(const Formula& canonical) : root_(canonical) {}

  bool tautology() {
    collect_atoms(root_);
    if (atoms_.size() > kMaxTautologyAtoms) return false;
    const std::size_t rows = std::size_t{1} << atoms_.size();
    words_ = rows < 64 ? 1 : rows / 64;
    const std::uint64_t last_mask = rows < 64 ? (std::uint64_t{1} << rows) - 1 : ~std::uint64_t{0};
    Bits v = eval(root_);
    for (std::size_t w = 0; w + 1 < words_; ++w) {
      if (v[w] != ~std::uint64_t{0}) return false;
    }
    return (v[words_ - 1] & last_mask) == last_mask;
  }

 private:
  void collect_atoms(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::Top:
      case FormulaKind::Bottom:
        return;
      case FormulaKind::Box:
      case FormulaKind::Dia:
        atoms_.emplace(f, atoms_.size());
        return;
      case FormulaKind::Neg:
        collect_atoms(f.lhs());
        return;
      default:
        collect_atoms(f.lhs());
        collect_atoms(f.rhs());
    }
  }

  Bits atom_bits(std::size_t i) const {
    static constexpr std::uint64_t kInWord[6] = {
        0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
        0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};
    Bits b(words_);
    for (std::size_t w = 0; w < words_; ++w) {
      if (i < 6) {
        b[w] = kInWord[i];
      } else {
        b[w] = ((w >> (i - 6)) & 1U) ? ~std::uint64_t{0} : 0;
      }
    }
    return b;
  }

  Bits eval(const Formula& f) const {
    switch (f.kind()) {
      case FormulaKind::Top: return Bits(words_, ~std::uint64_t{0});
      case FormulaKind::Bottom: return Bits(words_, 0);
      case FormulaKind::Box:
      case FormulaKind::Dia:
        return atom_bits(atoms_.at(f));
      case FormulaKind::Neg: {
        Bits a = eval(f.lhs());
        for (auto& w : a) w = ~w;
        return a;
      }
      default: break;
    }
    Bits a = eval(f.lhs());
    const Bits b = eval(f.rhs());
    for (std::size_t w = 0; w < words_; ++w) {
      switch (f.kind()) {
        case FormulaKind::And: a[w] &= b[w]; break;
        case FormulaKind::Or: a[w] |= b[w]; break;
        default: a[w] = ~a[w] | b[w]; break;  // Imp
      }
    }
    return a;
  }

  Formula root_;
  std::unordered_map<Formula, std::size_t> atoms_;
  std::size_t words_ = 1;
};

bool tautology_canonical(const Formula& c) { return TruthTable(c).tautology(); }

// ---------------------------------------------------------------------------
// Scheme matching on canonical formulas. Each matcher sees one orientation;
// the caller tries both the formula and its contrapositive.

bool is_box(const Formula& f, const ModalIndex* index = nullptr) {
  return f.is(FormulaKind::Box) && (index == nullptr || f.index() == *index);
}

std::optional<AxiomK> match_k(const Formula& c) {
  // [a](A -> B) -> ([a]A -> [a]B)
  if (!c.is(FormulaKind::Imp)) return std::nullopt;
  const Formula lhs = c.lhs(), rhs = c.rhs();
  if (!is_box(lhs) || !lhs.lhs().is(FormulaKind::Imp) || !rhs.is(FormulaKind::Imp)) return std::nullopt;
  const ModalIndex& a = lhs.index();
  const Formula A = lhs.lhs().lhs(), B = lhs.lhs().rhs();
  if (!is_box(rhs.lhs(), &a) || !is_box(rhs.rhs(), &a)) return std::nullopt;
  if (rhs.lhs().lhs() == A && rhs.rhs().lhs() == B) return AxiomK{a};
  return std::nullopt;
}

std::optional<AxiomLoeb> match_loeb(const Formula& c) {
  // [a]([a]A -> A) -> [a]A
  if (!c.is(FormulaKind::Imp)) return std::nullopt;
  const Formula lhs = c.lhs(), rhs = c.rhs();
  if (!is_box(lhs) || !is_box(rhs, &lhs.index())) return std::nullopt;
  const Formula inner = lhs.lhs();
  const Formula A = rhs.lhs();
  if (inner.is(FormulaKind::Imp) && inner.lhs() == rhs && inner.rhs() == A) return AxiomLoeb{lhs.index()};
  return std::nullopt;
}

std::optional<AxiomMono> match_mono(const Formula& c) {
  // [a]A -> [b]A, a <= b
  if (!c.is(FormulaKind::Imp) || !is_box(c.lhs()) || !is_box(c.rhs())) return std::nullopt;
  if (c.lhs().lhs() == c.rhs().lhs() && c.lhs().index() <= c.rhs().index()) {
    return AxiomMono{c.lhs().index(), c.rhs().index()};
  }
  return std::nullopt;
}

std::optional<AxiomNegIntro> match_neg_intro(const Formula& c) {
  // ~[a]C -> [b]~[a]C, a < b
  if (!c.is(FormulaKind::Imp)) return std::nullopt;
  const Formula lhs = c.lhs(), rhs = c.rhs();
  if (!lhs.is(FormulaKind::Neg) || !is_box(lhs.lhs()) || !is_box(rhs)) return std::nullopt;
  if (rhs.lhs() == lhs && lhs.lhs().index() < rhs.index()) {
    return AxiomNegIntro{lhs.lhs().index(), rhs.index()};
  }
  return std::nullopt;
}

// Both orientations of an implication: as written, and its contrapositive.
std::vector<Formula> orientations(const Formula& c) {
  std::vector<Formula> out{c};
  if (c.is(FormulaKind::Imp)) out.push_back(Formula::imp(neg_canonical(c.rhs()), neg_canonical(c.lhs())));
  return out;
}

bool instance_of(const Formula& c, const Justification& j) {
  return std::visit(
      [&](const auto& just) -> bool {
        using J = std::decay_t<decltype(just)>;
        if constexpr (std::is_same_v<J, PropTaut>) {
          return tautology_canonical(c);
        } else if constexpr (std::is_same_v<J, ModusPonens> || std::is_same_v<J, Necessitation>) {
          return false;
        } else {
          for (const Formula& o : orientations(c)) {
            if constexpr (std::is_same_v<J, AxiomK>) {
              if (match_k(o) == just) return true;
            } else if constexpr (std::is_same_v<J, AxiomLoeb>) {
              if (match_loeb(o) == just) return true;
            } else if constexpr (std::is_same_v<J, AxiomMono>) {
              if (match_mono(o) == just) return true;
            } else {
              if (match_neg_intro(o) == just) return true;
            }
          }
          return false;
        }
      },
      j);
}

template <class T>
void push_unique(std::vector<Justification>& out, const T& j) {
  Justification v = j;
  for (const auto& e : out) {
    if (e == v) return;
  }
  out.push_back(std::move(v));
}

}  // namespace

bool is_tautology(const Formula& f) { return tautology_canonical(canonical_form(f)); }

std::vector<Justification> match_axiom(const Formula& f) {
  const Formula c = canonical_form(f);
  std::vector<Justification> out;
  for (const Formula& o : orientations(c)) {
    if (auto j = match_k(o)) push_unique(out, *j);
    if (auto j = match_loeb(o)) push_unique(out, *j);
    if (auto j = match_mono(o)) push_unique(out, *j);
    if (auto j = match_neg_intro(o)) push_unique(out, *j);
  }
  if (tautology_canonical(c)) push_unique(out, PropTaut{});
  return out;
}

// ---------------------------------------------------------------------------
// Checker

CheckResult check_proof(const Proof& p) {
  std::vector<Formula> canon;
  canon.reserve(p.lines.size());
  auto fail = [](std::size_t line, std::string reason) {
    return CheckResult{ProofError{line, std::move(reason)}};
  };
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    const std::size_t n = i + 1;
    const ProofLine& line = p.lines[i];
    const Formula c = canonical_form(line.formula);
    auto in_range = [&](std::size_t ref) { return ref >= 1 && ref < n; };

    if (const auto* mp = std::get_if<ModusPonens>(&line.justification)) {
      if (!in_range(mp->minor) || !in_range(mp->major)) return fail(n, "dangling reference");
      const Formula& major = canon[mp->major - 1];
      if (!major.is(FormulaKind::Imp) || !(major.lhs() == canon[mp->minor - 1]) || !(major.rhs() == c)) {
        return fail(n, "wrong rule shape: line " + std::to_string(mp->major) +
                           " is not line " + std::to_string(mp->minor) + " -> this line");
      }
    } else if (const auto* nec = std::get_if<Necessitation>(&line.justification)) {
      if (!in_range(nec->line)) return fail(n, "dangling reference");
      if (!is_box(c, &nec->index) || !(c.lhs() == canon[nec->line - 1])) {
        return fail(n, "wrong rule shape: not [" + print_index(nec->index) + "] of line " +
                           std::to_string(nec->line));
      }
    } else {
      if (const auto* m = std::get_if<AxiomMono>(&line.justification); m && !(m->low <= m->high)) {
        return fail(n, "bad schema match: MONO requires low <= high");
      }
      if (const auto* m = std::get_if<AxiomNegIntro>(&line.justification); m && !(m->low < m->high)) {
        return fail(n, "bad schema match: NEGINTRO requires low < high");
      }
      if (!instance_of(c, line.justification)) {
        return fail(n, "bad schema match: not an instance of " + print_justification(line.justification));
      }
    }
    canon.push_back(c);
  }
  if (p.lines.empty()) return fail(1, "goal mismatch: empty proof");
  if (!(canon.back() == canonical_form(p.goal))) {
    return fail(p.lines.size() + 1, "goal mismatch: last line does not prove the goal");
  }
  return {};
}

// ---------------------------------------------------------------------------
// Text format

std::string print_justification(const Justification& j) {
  return std::visit(
      [](const auto& just) -> std::string {
        using J = std::decay_t<decltype(just)>;
        if constexpr (std::is_same_v<J, AxiomK>) {
          return "K(" + print_index(just.index) + ")";
        } else if constexpr (std::is_same_v<J, AxiomLoeb>) {
          return "LOEB(" + print_index(just.index) + ")";
        } else if constexpr (std::is_same_v<J, AxiomMono>) {
          return "MONO(" + print_index(just.low) + "," + print_index(just.high) + ")";
        } else if constexpr (std::is_same_v<J, AxiomNegIntro>) {
          return "NEGINTRO(" + print_index(just.low) + "," + print_index(just.high) + ")";
        } else if constexpr (std::is_same_v<J, PropTaut>) {
          return "TAUT";
        } else if constexpr (std::is_same_v<J, ModusPonens>) {
          return "MP(" + std::to_string(just.minor) + "," + std::to_string(just.major) + ")";
        } else {
          return "NEC(" + std::to_string(just.line) + "," + print_index(just.index) + ")";
        }
      },
      j);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t parse_line_number(std::string_view s) {
  s = trim(s);
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("bad line number '" + std::string(s) + "'", 0);
  }
  return v;
}

std::vector<std::string_view> split_args(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

Justification parse_justification(std::string_view text) {
  text = trim(text);
  if (text == "TAUT") return PropTaut{};
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') {
    throw ParseError("unknown justification '" + std::string(text) + "'", 0);
  }
  const std::string_view name = text.substr(0, open);
  const auto args = split_args(text.substr(open + 1, text.size() - open - 2));
  auto want = [&](std::size_t n) {
    if (args.size() != n) throw ParseError(std::string(name) + " expects " + std::to_string(n) + " arguments", 0);
  };
  auto idx = [](std::string_view s) { return ModalIndex(parse_ordinal(s)); };
  if (name == "K") {
    want(1);
    return AxiomK{idx(args[0])};
  }
  if (name == "LOEB") {
    want(1);
    return AxiomLoeb{idx(args[0])};
  }
  if (name == "MONO") {
    want(2);
    return AxiomMono{idx(args[0]), idx(args[1])};
  }
  if (name == "NEGINTRO") {
    want(2);
    return AxiomNegIntro{idx(args[0]), idx(args[1])};
  }
  if (name == "MP") {
    want(2);
    return ModusPonens{parse_line_number(args[0]), parse_line_number(args[1])};
  }
  if (name == "NEC") {
    want(2);
    return Necessitation{parse_line_number(args[0]), idx(args[1])};
  }
  throw ParseError("unknown justification '" + std::string(text) + "'", 0);
}

std::string print_proof(const Proof& p) {
  std::string out;
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    out += std::to_string(i + 1) + ". " + print_formula(p.lines[i].formula) + " ; " +
           print_justification(p.lines[i].justification) + "\n";
  }
  out += "GOAL " + print_formula(p.goal) + "\n";
  return out;
}

Proof parse_proof(std::string_view text) {
  Proof p;
  bool have_goal = false;
  std::size_t physical = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++physical;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    auto where = [&](const std::string& msg) { return "line " + std::to_string(physical) + ": " + msg; };
    try {
      if (have_goal) throw ParseError("content after GOAL", 0);
      if (line.starts_with("GOAL")) {
        p.goal = parse_formula(line.substr(4));
        have_goal = true;
        continue;
      }
      const auto dot = line.find('.');
      const auto semi = line.find(';');
      if (dot == std::string_view::npos || semi == std::string_view::npos || semi < dot) {
        throw ParseError("expected 'n. <formula> ; <justification>'", 0);
      }
      if (parse_line_number(line.substr(0, dot)) != p.lines.size() + 1) {
        throw ParseError("line numbers must be consecutive from 1", 0);
      }
      p.lines.push_back({parse_formula(line.substr(dot + 1, semi - dot - 1)),
                         parse_justification(line.substr(semi + 1))});
    } catch (const ParseError& e) {
      throw ParseError(where(e.message()), e.position());
    } catch (const DomainError& e) {
      throw ParseError(where(e.what()), 0);
    }
  }
  if (!have_goal) throw ParseError("missing GOAL line", 0);
  return p;
}

}  // namespace glp
