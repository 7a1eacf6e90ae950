#include "glp/formula.hpp"

#include <utility>

#include "glp/error.hpp"
#include "text_cursor.hpp"

namespace glp {

std::uint64_t ModalIndex::require_natural() const {
  auto n = natural();
  if (!n) throw DomainError("modal index " + print_index(*this) + " is not a natural number");
  return *n;
}

ModalIndex ModalIndex::successor() const { return ModalIndex(ord_add(value_, CnfOrdinal::natural(1))); }

std::string print_index(const ModalIndex& i) { return print_ordinal(i.value()); }

struct FormulaNode {
  FormulaKind kind;
  ModalIndex index;
  std::shared_ptr<const FormulaNode> a;
  std::shared_ptr<const FormulaNode> b;
  std::size_t hash;
  std::size_t size;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t index_hash(const ModalIndex& i) {
  if (auto n = i.natural()) return std::hash<std::uint64_t>{}(*n);
  return std::hash<std::string>{}(print_index(i));
}

const std::shared_ptr<const FormulaNode>& top_node() {
  static const auto node = std::make_shared<const FormulaNode>(
      FormulaNode{FormulaKind::Top, {}, nullptr, nullptr, 0x51ed, 1});
  return node;
}

const std::shared_ptr<const FormulaNode>& bottom_node() {
  static const auto node = std::make_shared<const FormulaNode>(
      FormulaNode{FormulaKind::Bottom, {}, nullptr, nullptr, 0xb07, 1});
  return node;
}

bool nodes_equal(const FormulaNode* x, const FormulaNode* y) {
  if (x == y) return true;
  if (x->hash != y->hash || x->kind != y->kind || x->size != y->size) return false;
  switch (x->kind) {
    case FormulaKind::Top:
    case FormulaKind::Bottom:
      return true;
    case FormulaKind::Neg:
      return nodes_equal(x->a.get(), y->a.get());
    case FormulaKind::Box:
    case FormulaKind::Dia:
      return x->index == y->index && nodes_equal(x->a.get(), y->a.get());
    default:
      return nodes_equal(x->a.get(), y->a.get()) && nodes_equal(x->b.get(), y->b.get());
  }
}

}  // namespace

Formula::Formula() : node_(top_node()) {}

Formula Formula::make(FormulaKind kind, ModalIndex index, const Formula* a, const Formula* b) {
  std::size_t h = mix(static_cast<std::size_t>(kind) * 0x100000001b3ULL, index_hash(index));
  std::size_t size = 1;
  FormulaNode node{kind, std::move(index), nullptr, nullptr, 0, 0};
  if (a) {
    node.a = a->node_;
    h = mix(h, a->hash());
    size += a->size();
  }
  if (b) {
    node.b = b->node_;
    h = mix(h, b->hash());
    size += b->size();
  }
  node.hash = h;
  node.size = size;
  return Formula(std::make_shared<const FormulaNode>(std::move(node)));
}

Formula Formula::top() { return Formula(top_node()); }
Formula Formula::bottom() { return Formula(bottom_node()); }
Formula Formula::neg(const Formula& a) { return make(FormulaKind::Neg, {}, &a, nullptr); }
Formula Formula::conj(const Formula& a, const Formula& b) { return make(FormulaKind::And, {}, &a, &b); }
Formula Formula::disj(const Formula& a, const Formula& b) { return make(FormulaKind::Or, {}, &a, &b); }
Formula Formula::imp(const Formula& a, const Formula& b) { return make(FormulaKind::Imp, {}, &a, &b); }
Formula Formula::box(const ModalIndex& i, const Formula& a) { return make(FormulaKind::Box, i, &a, nullptr); }
Formula Formula::dia(const ModalIndex& i, const Formula& a) { return make(FormulaKind::Dia, i, &a, nullptr); }

FormulaKind Formula::kind() const { return node_->kind; }
Formula Formula::lhs() const { return node_->a ? Formula(node_->a) : Formula(); }
Formula Formula::rhs() const { return node_->b ? Formula(node_->b) : Formula(); }
const ModalIndex& Formula::index() const { return node_->index; }
std::size_t Formula::hash() const { return node_->hash; }
std::size_t Formula::size() const { return node_->size; }

bool operator==(const Formula& a, const Formula& b) { return nodes_equal(a.node_.get(), b.node_.get()); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : cur_(text) {}

  Formula parse() {
    Formula f = parse_imp();
    if (!cur_.at_end()) cur_.fail("unexpected trailing input");
    return f;
  }

 private:
  Formula parse_imp() {
    Formula lhs = parse_or();
    if (cur_.accept("->")) return Formula::imp(lhs, parse_imp());
    return lhs;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (cur_.accept("|")) f = Formula::disj(f, parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (cur_.accept("&")) f = Formula::conj(f, parse_unary());
    return f;
  }

  Formula parse_unary() {
    if (cur_.accept("~")) return Formula::neg(parse_unary());
    if (cur_.accept("[")) {
      ModalIndex i(detail::parse_ordinal_at(cur_));
      cur_.expect("]");
      return Formula::box(i, parse_unary());
    }
    if (cur_.accept("<")) {
      ModalIndex i(detail::parse_ordinal_at(cur_));
      cur_.expect(">");
      return Formula::dia(i, parse_unary());
    }
    return parse_atom();
  }

  Formula parse_atom() {
    if (cur_.accept("T")) return Formula::top();
    if (cur_.accept("F")) return Formula::bottom();
    if (cur_.accept("(")) {
      Formula f = parse_imp();
      cur_.expect(")");
      return f;
    }
    cur_.fail("expected a formula");
  }

  detail::TextCursor cur_;
};

// Binding levels: 1 implication, 2 disjunction, 3 conjunction, 4 unary.
void print_at(const Formula& f, int level, std::string& out) {
  auto binary = [&](int own, const char* op, int left, int right) {
    const bool wrap = level > own;
    if (wrap) out += '(';
    print_at(f.lhs(), left, out);
    out += op;
    print_at(f.rhs(), right, out);
    if (wrap) out += ')';
  };
  switch (f.kind()) {
    case FormulaKind::Top: out += 'T'; break;
    case FormulaKind::Bottom: out += 'F'; break;
    case FormulaKind::Neg:
      out += '~';
      print_at(f.lhs(), 4, out);
      break;
    case FormulaKind::Box:
      out += '[' + print_index(f.index()) + ']';
      print_at(f.lhs(), 4, out);
      break;
    case FormulaKind::Dia:
      out += '<' + print_index(f.index()) + '>';
      print_at(f.lhs(), 4, out);
      break;
    case FormulaKind::Imp: binary(1, " -> ", 2, 1); break;
    case FormulaKind::Or: binary(2, " | ", 2, 3); break;
    case FormulaKind::And: binary(3, " & ", 3, 4); break;
  }
}

}  // namespace

Formula parse_formula(std::string_view text) { return FormulaParser(text).parse(); }

std::string print_formula(const Formula& f) {
  std::string out;
  print_at(f, 1, out);
  return out;
}

Formula normalize_top(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Top:
    case FormulaKind::Bottom:
      return f;
    case FormulaKind::Neg: {
      Formula a = normalize_top(f.lhs());
      if (a.is(FormulaKind::Neg)) return a.lhs();
      return a == f.lhs() ? f : Formula::neg(a);
    }
    case FormulaKind::And: {
      Formula a = normalize_top(f.lhs());
      Formula b = normalize_top(f.rhs());
      if (a.is(FormulaKind::Top)) return b;
      if (b.is(FormulaKind::Top)) return a;
      return Formula::conj(a, b);
    }
    case FormulaKind::Or: return Formula::disj(normalize_top(f.lhs()), normalize_top(f.rhs()));
    case FormulaKind::Imp: return Formula::imp(normalize_top(f.lhs()), normalize_top(f.rhs()));
    case FormulaKind::Box: return Formula::box(f.index(), normalize_top(f.lhs()));
    case FormulaKind::Dia: return Formula::dia(f.index(), normalize_top(f.lhs()));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Worms

Worm Worm::of(std::initializer_list<std::uint64_t> indices) {
  return of(std::vector<std::uint64_t>(indices));
}

Worm Worm::of(const std::vector<std::uint64_t>& indices) {
  std::vector<ModalIndex> out;
  out.reserve(indices.size());
  for (auto i : indices) out.push_back(ModalIndex::nat(i));
  return Worm(std::move(out));
}

std::vector<std::uint64_t> Worm::naturals() const {
  std::vector<std::uint64_t> out;
  out.reserve(indices_.size());
  for (const auto& i : indices_) out.push_back(i.require_natural());
  return out;
}

Formula Worm::to_formula() const {
  Formula f = Formula::top();
  for (auto it = indices_.rbegin(); it != indices_.rend(); ++it) f = Formula::dia(*it, f);
  return f;
}

std::optional<Worm> as_worm(const Formula& f) {
  std::vector<ModalIndex> indices;
  Formula cur = normalize_top(f);
  while (cur.is(FormulaKind::Dia)) {
    indices.push_back(cur.index());
    cur = cur.lhs();
  }
  if (!cur.is(FormulaKind::Top)) return std::nullopt;
  return Worm(std::move(indices));
}

Worm parse_worm(std::string_view text) {
  Formula f = parse_formula(text);
  auto w = as_worm(f);
  if (!w) throw ParseError("formula " + print_formula(f) + " is not a worm", 0);
  return *w;
}

std::string print_worm(const Worm& w) { return print_formula(w.to_formula()); }

}  // namespace glp
