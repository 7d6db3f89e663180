#ifndef TOPAL_NECESSITY_HPP_
#define TOPAL_NECESSITY_HPP_

#include <memory>
#include <string>

#include "topal/formula.hpp"

namespace topal {

/// A context with exactly one hole:
///
///   # | f -> xi | K_i xi | int(xi) | [f] xi
///
/// The single-hole property holds by construction: every non-hole shape
/// has exactly one necessity-form operand.
class NecessityForm {
 public:
  enum class Kind { kHole, kImplies, kKnow, kInt, kAnnounce };

  static NecessityForm hole();
  static NecessityForm implies(Formula antecedent, NecessityForm inner);
  static NecessityForm know(AgentId agent, NecessityForm inner);
  static NecessityForm interior(NecessityForm inner);
  static NecessityForm announce(Formula announced, NecessityForm inner);

  Kind kind() const;

  /// Replaces the hole by `f`.
  Formula instantiate(const Formula& f) const;

  /// Number of context layers above the hole.
  int depth() const;

 private:
  struct Node;

  std::shared_ptr<const Node> node_;  // null means hole
};

inline Formula instantiate(const NecessityForm& nf, const Formula& f) { return nf.instantiate(f); }

}  // namespace topal

#endif  // TOPAL_NECESSITY_HPP_
