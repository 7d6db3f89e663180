#include "topal/formula.hpp"

#include <algorithm>
#include <set>

namespace topal {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

int compare_nodes(const Formula& a, const Formula& b) {
  if (a.id() == b.id()) return 0;
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  if (a.op() != b.op()) return a.op() < b.op() ? -1 : 1;
  if (int c = a.label().compare(b.label()); c != 0) return c < 0 ? -1 : 1;
  for (std::size_t k = 0; k < a.arity(); ++k) {
    const Formula& x = k == 0 ? a.lhs() : a.rhs();
    const Formula& y = k == 0 ? b.lhs() : b.rhs();
    if (int c = compare_nodes(x, y); c != 0) return c;
  }
  return 0;
}

}  // namespace

Formula Formula::make(Op op, std::string label, std::vector<Formula> children) {
  Node node{op, std::move(label), std::move(children), 0, 0, false, 0};
  const auto& ch = node.children;
  switch (op) {
    case Op::kAtom:
      node.size = 1;
      break;
    case Op::kNot:
    case Op::kKnow:
    case Op::kInt:
      node.size = ch[0].size() + 1;
      node.box_depth = ch[0].box_depth();
      node.has_announcement = ch[0].has_announcement();
      break;
    case Op::kAnd:
      node.size = ch[0].size() + ch[1].size();
      node.box_depth = std::max(ch[0].box_depth(), ch[1].box_depth());
      node.has_announcement = ch[0].has_announcement() || ch[1].has_announcement();
      break;
    case Op::kAnnounce:
      node.size = ch[0].size() + 4 * ch[1].size();
      node.box_depth = std::max(ch[0].box_depth(), ch[1].box_depth());
      node.has_announcement = true;
      break;
    case Op::kBox:
      node.size = ch[0].size() + 1;
      node.box_depth = ch[0].box_depth() + 1;
      node.has_announcement = ch[0].has_announcement();
      break;
  }
  std::size_t h = mix(static_cast<std::size_t>(op), std::hash<std::string>{}(node.label));
  for (const auto& c : ch) h = mix(h, c.hash());
  node.hash = h;
  return Formula(std::make_shared<const Node>(std::move(node)));
}

Formula Formula::atom(PropId name) { return make(Op::kAtom, std::move(name), {}); }
Formula Formula::negation(Formula f) { return make(Op::kNot, {}, {std::move(f)}); }
Formula Formula::conjunction(Formula a, Formula b) {
  return make(Op::kAnd, {}, {std::move(a), std::move(b)});
}
Formula Formula::know(AgentId agent, Formula f) { return make(Op::kKnow, std::move(agent), {std::move(f)}); }
Formula Formula::interior(Formula f) { return make(Op::kInt, {}, {std::move(f)}); }
Formula Formula::announce(Formula announced, Formula body) {
  return make(Op::kAnnounce, {}, {std::move(announced), std::move(body)});
}
Formula Formula::box(Formula f) { return make(Op::kBox, {}, {std::move(f)}); }

bool operator==(const Formula& a, const Formula& b) {
  if (a.id() == b.id()) return true;
  if (a.hash() != b.hash()) return false;
  return compare_nodes(a, b) == 0;
}

bool operator<(const Formula& a, const Formula& b) { return compare_nodes(a, b) < 0; }

Formula falsum() {
  static const Formula bot = conj(atom(std::string(kFalsumAtom)), neg(atom(std::string(kFalsumAtom))));
  return bot;
}

Formula verum() { return neg(falsum()); }
Formula disj(Formula a, Formula b) { return neg(conj(neg(std::move(a)), neg(std::move(b)))); }
Formula implies(Formula a, Formula b) { return neg(conj(std::move(a), neg(std::move(b)))); }
Formula iff(Formula a, Formula b) { return conj(implies(a, b), implies(b, a)); }
Formula khat(AgentId i, Formula f) { return neg(know(std::move(i), neg(std::move(f)))); }
Formula diamond(Formula f) { return neg(box(neg(std::move(f)))); }
Formula dual_announce(Formula a, Formula b) { return neg(announce(std::move(a), neg(std::move(b)))); }

bool is_falsum(const Formula& f) {
  return f.op() == Op::kAnd && f.lhs().op() == Op::kAtom && f.lhs().label() == kFalsumAtom &&
         f.rhs().op() == Op::kNot && f.rhs().arg().op() == Op::kAtom && f.rhs().arg().label() == kFalsumAtom;
}

bool in_el(const Formula& f) { return f.box_depth() == 0 && !f.has_announcement(); }
bool in_pal(const Formula& f) { return f.box_depth() == 0; }

bool in_propositional(const Formula& f) {
  switch (f.op()) {
    case Op::kAtom: return true;
    case Op::kNot: return in_propositional(f.arg());
    case Op::kAnd: return in_propositional(f.lhs()) && in_propositional(f.rhs());
    default: return false;
  }
}

OrderRelations compare(const Formula& f, const Formula& g) {
  OrderRelations r;
  r.less_size = f.size() < g.size();
  r.less_depth = f.box_depth() < g.box_depth();
  r.less_size_depth = r.less_depth || (f.box_depth() == g.box_depth() && r.less_size);
  return r;
}

namespace {

void collect(const Formula& f, std::set<Formula>& out) {
  if (!out.insert(f).second) return;
  for (std::size_t k = 0; k < f.arity(); ++k) collect(k == 0 ? f.lhs() : f.rhs(), out);
}

template <typename Pred>
void collect_labels(const Formula& f, Pred pred, std::set<std::string>& out) {
  if (pred(f)) out.insert(f.label());
  for (std::size_t k = 0; k < f.arity(); ++k) collect_labels(k == 0 ? f.lhs() : f.rhs(), pred, out);
}

}  // namespace

std::vector<Formula> subformulas(const Formula& f) {
  std::set<Formula> out;
  collect(f, out);
  return {out.begin(), out.end()};
}

std::vector<PropId> atoms_of(const Formula& f) {
  std::set<std::string> out;
  collect_labels(f, [](const Formula& g) { return g.op() == Op::kAtom; }, out);
  return {out.begin(), out.end()};
}

std::vector<AgentId> agents_of(const Formula& f) {
  std::set<std::string> out;
  collect_labels(f, [](const Formula& g) { return g.op() == Op::kKnow; }, out);
  return {out.begin(), out.end()};
}

}  // namespace topal
