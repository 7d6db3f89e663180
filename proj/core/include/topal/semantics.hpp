#ifndef TOPAL_SEMANTICS_HPP_
#define TOPAL_SEMANTICS_HPP_

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "topal/formula.hpp"
#include "topal/model.hpp"

namespace topal {

/// How Box quantifies.
///   kAnnouncement: over the updates realizable by announcing a Box-free
///                  formula (the opens definable relative to theta).
///   kEffort:       over every open neighbourhood inside the domain.
enum class BoxMode { kAnnouncement, kEffort };

struct DefinableMember {
  Subset set;
  Formula witness;  ///< announcement-free, Box-free; its extension is `set`
};

/// The subsets of Dom(theta) that are extensions of Box-free,
/// announcement-free formulas, each with a smallest-size witness.
class DefinableFamily {
 public:
  DefinableFamily(NeighbourhoodFunction theta, std::vector<DefinableMember> members);

  const NeighbourhoodFunction& theta() const { return theta_; }
  /// Members in order of nondecreasing witness size.
  const std::vector<DefinableMember>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Subset s) const { return index_.count(s) != 0; }
  /// Witness for `s`, or nullptr when `s` is not definable.
  const Formula* witness(Subset s) const;
  /// Members that are open, in increasing bitmask order.
  std::vector<Subset> open_members(const Topology& topology) const;

 private:
  NeighbourhoodFunction theta_;
  std::vector<DefinableMember> members_;
  std::unordered_map<Subset, std::size_t> index_;
};

/// Computes the definable family from scratch: the least family containing
/// the atom extensions, the empty set and the domain, closed under relative
/// complement, intersection, every K_i and the interior operator.
DefinableFamily compute_definable_family(const TopoModel& model, const NeighbourhoodFunction& theta);

/// Model checker bound to one model. The model must outlive the evaluator.
/// Definable families are memoized per neighbourhood function; all const
/// members may be called concurrently.
class Evaluator {
 public:
  explicit Evaluator(const TopoModel& model);

  const TopoModel& model() const { return model_; }

  /// [[f]]^theta: the points of Dom(theta) where f holds.
  Subset extension(const NeighbourhoodFunction& theta, const Formula& f,
                   BoxMode mode = BoxMode::kAnnouncement) const;

  /// Throws EvalError if the point lies outside Dom(theta).
  bool evaluate(const Situation& s, const Formula& f, BoxMode mode = BoxMode::kAnnouncement) const;

  /// theta^f: theta restricted to Int [[f]]^theta (possibly empty).
  NeighbourhoodFunction update(const NeighbourhoodFunction& theta, const Formula& f,
                               BoxMode mode = BoxMode::kAnnouncement) const;

  std::shared_ptr<const DefinableFamily> definable_family(const NeighbourhoodFunction& theta) const;

  /// Every neighbourhood function of the model (generators restricted to opens).
  const std::vector<NeighbourhoodFunction>& functions() const;

  /// True at every situation of the model.
  bool valid(const Formula& f, BoxMode mode = BoxMode::kAnnouncement) const;

  /// Throws EvalError naming the first unknown agent or proposition.
  void check_vocabulary(const Formula& f) const;

  std::size_t cached_families() const;

 private:
  Subset eval(const NeighbourhoodFunction& theta, const Formula& f, BoxMode mode) const;
  Subset quantify_box(const NeighbourhoodFunction& theta, const Formula& body, BoxMode mode) const;
  int agent_index(const std::string& agent) const;

  const TopoModel& model_;
  mutable std::once_flag phi_once_;
  mutable std::vector<NeighbourhoodFunction> phi_;
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<NeighbourhoodFunction, std::shared_ptr<const DefinableFamily>> families_;
};

bool evaluate(const TopoModel& m, const Situation& s, const Formula& f, BoxMode mode = BoxMode::kAnnouncement);
Subset extension(const TopoModel& m, const NeighbourhoodFunction& theta, const Formula& f,
                 BoxMode mode = BoxMode::kAnnouncement);
NeighbourhoodFunction update(const TopoModel& m, const NeighbourhoodFunction& theta, const Formula& f);
bool valid_in_model(const TopoModel& m, const Formula& f, BoxMode mode = BoxMode::kAnnouncement);

/// A situation and formula on which the two Box modes disagree.
struct Distinction {
  Situation situation;
  Formula formula;
  bool announcement_value;
  bool effort_value;
};

/// Searches every situation of `m` for a candidate whose truth differs
/// between kAnnouncement and kEffort. An empty result only means none of
/// the candidates distinguishes the modes on this model.
std::optional<Distinction> find_distinguishing(const TopoModel& m, std::span<const Formula> candidates);

}  // namespace topal

#endif  // TOPAL_SEMANTICS_HPP_
