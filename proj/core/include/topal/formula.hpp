#ifndef TOPAL_FORMULA_HPP_
#define TOPAL_FORMULA_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace topal {

using AgentId = std::string;
using PropId = std::string;

/// Proposition id reserved for the encoding of falsum as `_bot & ~_bot`.
/// It never appears in a model's valuation and is always false.
inline constexpr std::string_view kFalsumAtom = "_bot";

enum class Op : std::uint8_t { kAtom, kNot, kAnd, kKnow, kInt, kAnnounce, kBox };

/// Immutable formula over the primitive connectives
///
///   p | ~f | f & g | K_i f | int(f) | [f] g | box f
///
/// Derived connectives are built by the free functions below and never
/// stored. Copies share structure; equality is structural. Size and
/// box-depth are computed once at construction.
class Formula {
 public:
  Op op() const { return node_->op; }

  /// Proposition id for atoms, agent id for K_i; empty otherwise.
  const std::string& label() const { return node_->label; }

  /// First operand (the announced formula for announcements).
  const Formula& lhs() const { return node_->children[0]; }
  /// Second operand of a binary node (the announcement's body).
  const Formula& rhs() const { return node_->children[1]; }
  /// Single operand of a unary node.
  const Formula& arg() const { return node_->children[0]; }
  std::size_t arity() const { return node_->children.size(); }

  std::uint64_t size() const { return node_->size; }
  std::uint32_t box_depth() const { return node_->box_depth; }
  bool has_announcement() const { return node_->has_announcement; }
  std::size_t hash() const { return node_->hash; }

  /// Identity of the shared node; stable while any copy is alive.
  const void* id() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);
  /// Structural total order: size, then operator, then label, then operands.
  friend bool operator<(const Formula& a, const Formula& b);

  static Formula atom(PropId name);
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula know(AgentId agent, Formula f);
  static Formula interior(Formula f);
  static Formula announce(Formula announced, Formula body);
  static Formula box(Formula f);

 private:
  struct Node {
    Op op;
    std::string label;
    std::vector<Formula> children;
    std::uint64_t size;
    std::uint32_t box_depth;
    bool has_announcement;
    std::size_t hash;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Op op, std::string label, std::vector<Formula> children);

  std::shared_ptr<const Node> node_;
};

// Primitive constructors.
inline Formula atom(PropId p) { return Formula::atom(std::move(p)); }
inline Formula neg(Formula f) { return Formula::negation(std::move(f)); }
inline Formula conj(Formula a, Formula b) { return Formula::conjunction(std::move(a), std::move(b)); }
inline Formula know(AgentId i, Formula f) { return Formula::know(std::move(i), std::move(f)); }
inline Formula interior(Formula f) { return Formula::interior(std::move(f)); }
inline Formula announce(Formula a, Formula b) { return Formula::announce(std::move(a), std::move(b)); }
inline Formula box(Formula f) { return Formula::box(std::move(f)); }

// Abbreviations, desugared on construction.
Formula falsum();
Formula verum();
Formula disj(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula iff(Formula a, Formula b);
Formula khat(AgentId i, Formula f);
Formula diamond(Formula f);
/// <a> b, i.e. ~[a]~b.
Formula dual_announce(Formula a, Formula b);

bool is_falsum(const Formula& f);

/// No Box and no announcement.
bool in_el(const Formula& f);
/// No Box.
bool in_pal(const Formula& f);
/// Only atoms, negation and conjunction.
bool in_propositional(const Formula& f);

/// S(f): weighted symbol count with announcements weighted 4 on the body.
inline std::uint64_t size(const Formula& f) { return f.size(); }
/// d(f): nesting depth of Box.
inline std::uint32_t box_depth(const Formula& f) { return f.box_depth(); }

struct OrderRelations {
  bool less_size = false;        ///< f <^S g
  bool less_depth = false;       ///< f <_d g
  bool less_size_depth = false;  ///< f <^S_d g (lexicographic on (d, S))
};

OrderRelations compare(const Formula& f, const Formula& g);

/// f and all of its proper subformulas, each once, in structural order.
std::vector<Formula> subformulas(const Formula& f);

/// Every proposition id mentioned in f, sorted, without duplicates.
std::vector<PropId> atoms_of(const Formula& f);
/// Every agent id mentioned in f, sorted, without duplicates.
std::vector<AgentId> agents_of(const Formula& f);

}  // namespace topal

template <>
struct std::hash<topal::Formula> {
  std::size_t operator()(const topal::Formula& f) const noexcept { return f.hash(); }
};

#endif  // TOPAL_FORMULA_HPP_
