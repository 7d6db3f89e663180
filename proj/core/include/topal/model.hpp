#ifndef TOPAL_MODEL_HPP_
#define TOPAL_MODEL_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "topal/formula.hpp"
#include "topal/subset.hpp"
#include "topal/topology.hpp"

namespace topal {

/// A partial map point -> agent -> subset, stored as a dense table over
/// (point, agent). Entries for points outside the domain are empty.
/// Identity is extensional: same domain and same table.
class NeighbourhoodFunction {
 public:
  /// The empty-domain function.
  NeighbourhoodFunction(int num_points, int num_agents);

  /// `cells[point * num_agents + agent]`; entries outside `domain` are cleared.
  NeighbourhoodFunction(int num_points, int num_agents, Subset domain, std::vector<Subset> cells);

  /// Total function from one cell list per agent. Each point takes the first
  /// listed cell that contains it; uncovered points get an empty cell (which
  /// validate() reports).
  static NeighbourhoodFunction from_partitions(int num_points, const std::vector<std::vector<Subset>>& cells);

  int num_points() const { return num_points_; }
  int num_agents() const { return num_agents_; }
  Subset domain() const { return domain_; }
  bool defined_at(int point) const { return domain_.contains(point); }

  /// The epistemic neighbourhood of `agent` at `point`. Throws EvalError if
  /// the point is outside the domain.
  Subset cell(int point, int agent) const;

  /// Table entry without the domain check (empty outside the domain).
  Subset raw_cell(int point, int agent) const {
    return cells_[static_cast<std::size_t>(point) * num_agents_ + agent];
  }

  /// Distinct cells of `agent`, in order of their least point.
  std::vector<Subset> cells_of(int agent) const;

  std::size_t hash() const;
  friend bool operator==(const NeighbourhoodFunction&, const NeighbourhoodFunction&) = default;

 private:
  int num_points_;
  int num_agents_;
  Subset domain_;
  std::vector<Subset> cells_;
};

/// theta|_U: domain and every cell intersected with `u`. No openness check.
NeighbourhoodFunction restrict_unchecked(const NeighbourhoodFunction& theta, Subset u);

/// theta|_U for an open `u`; throws ModelError otherwise.
NeighbourhoodFunction restrict(const NeighbourhoodFunction& theta, Subset u, const Topology& topology);

struct NamedFunction {
  std::string name;
  NeighbourhoodFunction theta;
};

/// Topology plus total generator functions. The neighbourhood function set
/// is every restriction of a generator to an open set.
class TopoFrame {
 public:
  TopoFrame(Topology topology, std::vector<AgentId> agents, std::vector<NamedFunction> generators);

  const Topology& topology() const { return topology_; }
  const PointSpace& space() const { return topology_.space(); }
  const std::vector<AgentId>& agents() const { return agents_; }
  int num_agents() const { return static_cast<int>(agents_.size()); }
  /// Index of `agent`, or -1.
  int find_agent(const std::string& agent) const;
  const std::vector<NamedFunction>& generators() const { return generators_; }
  /// Throws ModelError for unknown names.
  const NeighbourhoodFunction& generator(const std::string& name) const;

 private:
  Topology topology_;
  std::vector<AgentId> agents_;
  std::vector<NamedFunction> generators_;
};

class TopoModel {
 public:
  TopoModel(TopoFrame frame, std::map<PropId, Subset> valuation);

  const TopoFrame& frame() const { return frame_; }
  const Topology& topology() const { return frame_.topology(); }
  const PointSpace& space() const { return frame_.space(); }
  const std::map<PropId, Subset>& valuation() const { return valuation_; }

  /// V(p). The reserved falsum atom is always empty; other unknown ids
  /// throw EvalError.
  Subset truth_set(const PropId& p) const;

 private:
  TopoFrame frame_;
  std::map<PropId, Subset> valuation_;
};

/// An evaluation point inside the domain of a neighbourhood function.
struct Situation {
  int point;
  NeighbourhoodFunction theta;
};

struct Violation {
  std::string condition;  ///< e.g. "cond1", "cond4", "topology", "valuation"
  std::string detail;
};

/// Checks conditions (1)-(4) on one function; `label` prefixes the details.
std::vector<Violation> check_function(const TopoFrame& frame, const NeighbourhoodFunction& theta,
                                      const std::string& label);

/// Structural validation of a whole model. Empty means valid.
std::vector<Violation> validate(const TopoModel& model);

/// Every restriction of every generator to an open set, deduplicated
/// extensionally, in generator-then-open order.
std::vector<NeighbourhoodFunction> enumerate_phi(const TopoFrame& frame);

/// The subspace model on `keep` (nonempty): opens, cells and valuation are
/// intersected with `keep` and points renumbered in order.
TopoModel submodel(const TopoModel& model, Subset keep);

}  // namespace topal

template <>
struct std::hash<topal::NeighbourhoodFunction> {
  std::size_t operator()(const topal::NeighbourhoodFunction& f) const noexcept { return f.hash(); }
};

#endif  // TOPAL_MODEL_HPP_
