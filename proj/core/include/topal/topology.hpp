#ifndef TOPAL_TOPOLOGY_HPP_
#define TOPAL_TOPOLOGY_HPP_

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "topal/subset.hpp"

namespace topal {

/// Ordered, nonempty list of distinct point ids. Subsets are bitmasks over
/// this order.
class PointSpace {
 public:
  explicit PointSpace(std::vector<std::string> ids);

  int size() const { return static_cast<int>(ids_.size()); }
  Subset all() const { return Subset::full(size()); }
  const std::string& id(int index) const { return ids_.at(index); }
  const std::vector<std::string>& ids() const { return ids_; }

  /// Throws ModelError for unknown ids.
  int index_of(const std::string& id) const;
  bool contains(const std::string& id) const { return index_.count(id) != 0; }
  Subset subset(std::span<const std::string> ids) const;
  std::vector<std::string> names(Subset s) const;

  /// Renders `{a,b,c}` in point order.
  std::string format(Subset s) const;

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, int> index_;
};

/// A finite topology with every open set enumerated.
class Topology {
 public:
  /// Smallest topology containing `subbase`: the empty set, the whole
  /// space, finite intersections of subbase members, and all their unions.
  /// Throws ModelError if a member is not a subset of the space.
  static Topology from_subbase(PointSpace space, std::span<const Subset> subbase);

  /// Takes `opens` verbatim, without closing it. Use check() to see whether
  /// the family actually is a topology.
  static Topology from_family(PointSpace space, std::vector<Subset> opens);

  const PointSpace& space() const { return space_; }
  /// Opens in increasing bitmask order.
  const std::vector<Subset>& opens() const { return opens_; }
  bool is_open(Subset s) const;

  /// Largest open subset of `s`. Throws ModelError if `s` leaves the space.
  Subset interior(Subset s) const;

  /// Smallest open set containing `point` (intersection of its open
  /// neighbourhoods).
  Subset minimal_neighbourhood(int point) const { return minimal_nbhd_.at(point); }

  /// True iff every nonempty open is a union of members of `family`.
  /// Throws ModelError if a member is not open.
  bool is_base(std::span<const Subset> family) const;

  /// Violations of the topology axioms (empty for a genuine topology).
  std::vector<std::string> check() const;

 private:
  Topology(PointSpace space, std::vector<Subset> opens, bool closed_under_meets);

  PointSpace space_;
  std::vector<Subset> opens_;
  std::vector<bool> open_flag_;  // indexed by bitmask
  std::vector<Subset> minimal_nbhd_;
  bool closed_under_meets_ = false;
};

/// Reference interior: union of every enumerated open contained in `s`.
Subset interior_by_scan(const Topology& t, Subset s);

}  // namespace topal

#endif  // TOPAL_TOPOLOGY_HPP_
