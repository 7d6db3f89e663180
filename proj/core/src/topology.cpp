#include "topal/topology.hpp"

#include <algorithm>
#include <sstream>

#include "topal/error.hpp"

namespace topal {

PointSpace::PointSpace(std::vector<std::string> ids) : ids_(std::move(ids)) {
  if (ids_.empty()) throw ModelError("point space must be nonempty");
  if (ids_.size() > static_cast<std::size_t>(kMaxPoints))
    throw ModelError("point space exceeds " + std::to_string(kMaxPoints) + " points");
  for (std::size_t k = 0; k < ids_.size(); ++k) {
    if (ids_[k].empty()) throw ModelError("point ids must be nonempty");
    if (!index_.emplace(ids_[k], static_cast<int>(k)).second)
      throw ModelError("duplicate point id '" + ids_[k] + "'");
  }
}

int PointSpace::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw ModelError("unknown point '" + id + "'");
  return it->second;
}

Subset PointSpace::subset(std::span<const std::string> ids) const {
  Subset s;
  for (const auto& id : ids) s |= Subset::singleton(index_of(id));
  return s;
}

std::vector<std::string> PointSpace::names(Subset s) const {
  std::vector<std::string> out;
  s.for_each([&](int p) { out.push_back(ids_.at(p)); });
  return out;
}

std::string PointSpace::format(Subset s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int p) {
    if (!first) out += ",";
    out += ids_.at(p);
    first = false;
  });
  return out + "}";
}

Topology::Topology(PointSpace space, std::vector<Subset> opens, bool closed_under_meets)
    : space_(std::move(space)), opens_(std::move(opens)), closed_under_meets_(closed_under_meets) {
  std::sort(opens_.begin(), opens_.end());
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  open_flag_.assign(std::size_t{1} << space_.size(), false);
  for (Subset u : opens_) open_flag_[u.bits()] = true;

  if (!closed_under_meets_) {
    closed_under_meets_ = true;
    for (std::size_t a = 0; a < opens_.size() && closed_under_meets_; ++a)
      for (std::size_t b = a + 1; b < opens_.size(); ++b)
        if (!is_open(opens_[a] & opens_[b])) {
          closed_under_meets_ = false;
          break;
        }
  }

  minimal_nbhd_.assign(space_.size(), space_.all());
  for (Subset u : opens_) u.for_each([&](int p) { minimal_nbhd_[p] &= u; });
}

Topology Topology::from_subbase(PointSpace space, std::span<const Subset> subbase) {
  const Subset all = space.all();
  for (Subset s : subbase)
    if (!s.is_subset_of(all)) throw ModelError("subbase member " + std::to_string(s.bits()) + " leaves the space");

  // Finite intersections (the empty intersection is the whole space).
  std::vector<bool> seen(std::size_t{1} << space.size(), false);
  std::vector<Subset> base{all};
  seen[all.bits()] = true;
  for (std::size_t k = 0; k < base.size(); ++k)
    for (Subset s : subbase) {
      Subset m = base[k] & s;
      if (!seen[m.bits()]) {
        seen[m.bits()] = true;
        base.push_back(m);
      }
    }

  // All unions of base members, including the empty union.
  std::fill(seen.begin(), seen.end(), false);
  std::vector<Subset> opens{Subset{}};
  seen[0] = true;
  for (std::size_t k = 0; k < opens.size(); ++k)
    for (Subset b : base) {
      Subset u = opens[k] | b;
      if (!seen[u.bits()]) {
        seen[u.bits()] = true;
        opens.push_back(u);
      }
    }
  return Topology(std::move(space), std::move(opens), true);
}

Topology Topology::from_family(PointSpace space, std::vector<Subset> opens) {
  const Subset all = space.all();
  for (Subset s : opens)
    if (!s.is_subset_of(all)) throw ModelError("open set " + std::to_string(s.bits()) + " leaves the space");
  return Topology(std::move(space), std::move(opens), false);
}

bool Topology::is_open(Subset s) const {
  return s.bits() < open_flag_.size() && open_flag_[s.bits()];
}

Subset Topology::interior(Subset s) const {
  if (!s.is_subset_of(space_.all())) throw ModelError("interior of a set outside the space");
  if (!closed_under_meets_) return interior_by_scan(*this, s);
  Subset result;
  s.for_each([&](int p) {
    if (minimal_nbhd_[p].is_subset_of(s)) result |= Subset::singleton(p);
  });
  return result;
}

bool Topology::is_base(std::span<const Subset> family) const {
  for (Subset b : family)
    if (!is_open(b)) throw ModelError("base candidate " + space_.format(b) + " is not open");
  for (Subset u : opens_) {
    Subset covered;
    for (Subset b : family)
      if (b.is_subset_of(u)) covered |= b;
    if (covered != u) return false;
  }
  return true;
}

std::vector<std::string> Topology::check() const {
  std::vector<std::string> out;
  if (!is_open(Subset{})) out.push_back("empty set is not open");
  if (!is_open(space_.all())) out.push_back("whole space is not open");
  for (std::size_t a = 0; a < opens_.size(); ++a)
    for (std::size_t b = a + 1; b < opens_.size(); ++b) {
      if (!is_open(opens_[a] & opens_[b]))
        out.push_back("intersection of " + space_.format(opens_[a]) + " and " + space_.format(opens_[b]) +
                      " is not open");
      if (!is_open(opens_[a] | opens_[b]))
        out.push_back("union of " + space_.format(opens_[a]) + " and " + space_.format(opens_[b]) + " is not open");
    }
  return out;
}

Subset interior_by_scan(const Topology& t, Subset s) {
  Subset result;
  for (Subset u : t.opens())
    if (u.is_subset_of(s)) result |= u;
  return result;
}

}  // namespace topal
