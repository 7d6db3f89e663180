#include "topal/model.hpp"

#include <algorithm>
#include <unordered_set>

#include "topal/error.hpp"
#include "topal/formula_io.hpp"

namespace topal {

NeighbourhoodFunction::NeighbourhoodFunction(int num_points, int num_agents)
    : num_points_(num_points),
      num_agents_(num_agents),
      cells_(static_cast<std::size_t>(num_points) * num_agents) {}

NeighbourhoodFunction::NeighbourhoodFunction(int num_points, int num_agents, Subset domain,
                                             std::vector<Subset> cells)
    : num_points_(num_points), num_agents_(num_agents), domain_(domain), cells_(std::move(cells)) {
  if (cells_.size() != static_cast<std::size_t>(num_points) * num_agents)
    throw ModelError("neighbourhood table has the wrong shape");
  if (!domain_.is_subset_of(Subset::full(num_points))) throw ModelError("domain leaves the space");
  for (int p = 0; p < num_points_; ++p)
    if (!domain_.contains(p))
      for (int i = 0; i < num_agents_; ++i) cells_[static_cast<std::size_t>(p) * num_agents_ + i] = Subset{};
}

NeighbourhoodFunction NeighbourhoodFunction::from_partitions(int num_points,
                                                             const std::vector<std::vector<Subset>>& cells) {
  const int num_agents = static_cast<int>(cells.size());
  std::vector<Subset> table(static_cast<std::size_t>(num_points) * num_agents);
  for (int i = 0; i < num_agents; ++i)
    for (int p = 0; p < num_points; ++p)
      for (Subset c : cells[i])
        if (c.contains(p)) {
          table[static_cast<std::size_t>(p) * num_agents + i] = c;
          break;
        }
  return NeighbourhoodFunction(num_points, num_agents, Subset::full(num_points), std::move(table));
}

Subset NeighbourhoodFunction::cell(int point, int agent) const {
  if (point < 0 || point >= num_points_ || !domain_.contains(point))
    throw EvalError("point index " + std::to_string(point) + " is outside the neighbourhood function's domain");
  if (agent < 0 || agent >= num_agents_) throw EvalError("agent index out of range");
  return raw_cell(point, agent);
}

std::vector<Subset> NeighbourhoodFunction::cells_of(int agent) const {
  std::vector<Subset> out;
  domain_.for_each([&](int p) {
    Subset c = raw_cell(p, agent);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  });
  return out;
}

std::size_t NeighbourhoodFunction::hash() const {
  std::size_t h = std::hash<std::uint32_t>{}(domain_.bits());
  for (Subset c : cells_) h = h * 1099511628211ULL ^ c.bits();
  return h;
}

NeighbourhoodFunction restrict_unchecked(const NeighbourhoodFunction& theta, Subset u) {
  const int n = theta.num_points();
  const int a = theta.num_agents();
  std::vector<Subset> table(static_cast<std::size_t>(n) * a);
  const Subset domain = theta.domain() & u;
  domain.for_each([&](int p) {
    for (int i = 0; i < a; ++i) table[static_cast<std::size_t>(p) * a + i] = theta.raw_cell(p, i) & u;
  });
  return NeighbourhoodFunction(n, a, domain, std::move(table));
}

NeighbourhoodFunction restrict(const NeighbourhoodFunction& theta, Subset u, const Topology& topology) {
  if (!topology.is_open(u)) throw ModelError("restriction to non-open set " + topology.space().format(u));
  return restrict_unchecked(theta, u);
}

TopoFrame::TopoFrame(Topology topology, std::vector<AgentId> agents, std::vector<NamedFunction> generators)
    : topology_(std::move(topology)), agents_(std::move(agents)), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.theta.num_points() != topology_.space().size() || g.theta.num_agents() != num_agents())
      throw ModelError("generator '" + g.name + "' does not match the frame's points and agents");
}

int TopoFrame::find_agent(const std::string& agent) const {
  auto it = std::find(agents_.begin(), agents_.end(), agent);
  return it == agents_.end() ? -1 : static_cast<int>(it - agents_.begin());
}

const NeighbourhoodFunction& TopoFrame::generator(const std::string& name) const {
  for (const auto& g : generators_)
    if (g.name == name) return g.theta;
  throw ModelError("unknown generator '" + name + "'");
}

TopoModel::TopoModel(TopoFrame frame, std::map<PropId, Subset> valuation)
    : frame_(std::move(frame)), valuation_(std::move(valuation)) {}

Subset TopoModel::truth_set(const PropId& p) const {
  auto it = valuation_.find(p);
  if (it != valuation_.end()) return it->second;
  if (p == kFalsumAtom) return Subset{};
  throw EvalError("unknown proposition '" + p + "'");
}

std::vector<Violation> check_function(const TopoFrame& frame, const NeighbourhoodFunction& theta,
                                      const std::string& label) {
  std::vector<Violation> out;
  const Topology& top = frame.topology();
  const PointSpace& space = frame.space();
  const Subset domain = theta.domain();
  auto where = [&](int p, int i) {
    return label + " at " + space.id(p) + " for agent " + frame.agents().at(i) + ": ";
  };
  domain.for_each([&](int x) {
    for (int i = 0; i < theta.num_agents(); ++i) {
      const Subset c = theta.raw_cell(x, i);
      if (!top.is_open(c)) out.push_back({"cond1", where(x, i) + "cell " + space.format(c) + " is not open"});
      if (!c.contains(x)) out.push_back({"cond2", where(x, i) + "cell " + space.format(c) + " misses the point"});
      if (!c.is_subset_of(domain))
        out.push_back({"cond3", where(x, i) + "cell " + space.format(c) + " leaves the domain"});
      bool partition_ok = true;
      (c & domain).for_each([&](int y) {
        if (partition_ok && theta.raw_cell(y, i) != c) {
          out.push_back({"cond4", where(x, i) + space.id(y) + " lies in cell " + space.format(c) +
                                      " but its own cell is " + space.format(theta.raw_cell(y, i))});
          partition_ok = false;
        }
      });
    }
  });
  if (!top.is_open(domain)) out.push_back({"domain", label + ": domain " + space.format(domain) + " is not open"});
  return out;
}

std::vector<Violation> validate(const TopoModel& model) {
  std::vector<Violation> out;
  const TopoFrame& frame = model.frame();
  const Topology& top = frame.topology();

  for (auto& msg : top.check()) out.push_back({"topology", msg});

  if (frame.agents().empty()) out.push_back({"agents", "agent list is empty"});
  std::unordered_set<std::string> seen;
  for (const auto& a : frame.agents()) {
    if (!is_valid_identifier(a)) out.push_back({"agents", "invalid agent id '" + a + "'"});
    if (!seen.insert(a).second) out.push_back({"agents", "duplicate agent id '" + a + "'"});
  }

  if (frame.generators().empty()) out.push_back({"generators", "no generator functions"});
  seen.clear();
  for (const auto& g : frame.generators()) {
    if (g.name.empty()) out.push_back({"generators", "generator with empty name"});
    if (!seen.insert(g.name).second) out.push_back({"generators", "duplicate generator name '" + g.name + "'"});
    if (g.theta.domain() != frame.space().all())
      out.push_back({"generators", "generator '" + g.name + "' is not total"});
    auto own = check_function(frame, g.theta, "generator '" + g.name + "'");
    out.insert(out.end(), own.begin(), own.end());
    if (!own.empty()) continue;

    // Restrictions inherit (1)-(4) from a sound generator; sample them anyway.
    const auto& opens = top.opens();
    const std::size_t stride = std::max<std::size_t>(1, opens.size() / 256);
    for (std::size_t k = 0; k < opens.size(); k += stride) {
      auto r = check_function(frame, restrict_unchecked(g.theta, opens[k]),
                              "restriction of '" + g.name + "' to " + frame.space().format(opens[k]));
      out.insert(out.end(), r.begin(), r.end());
    }
  }

  for (const auto& [p, s] : model.valuation()) {
    if (!is_valid_identifier(p)) out.push_back({"valuation", "invalid proposition id '" + p + "'"});
    if (!s.is_subset_of(frame.space().all())) out.push_back({"valuation", "V(" + p + ") leaves the space"});
  }
  return out;
}

std::vector<NeighbourhoodFunction> enumerate_phi(const TopoFrame& frame) {
  std::vector<NeighbourhoodFunction> out;
  std::unordered_set<NeighbourhoodFunction> seen;
  for (const auto& g : frame.generators())
    for (Subset u : frame.topology().opens()) {
      auto r = restrict_unchecked(g.theta, u);
      if (seen.insert(r).second) out.push_back(std::move(r));
    }
  return out;
}

namespace {

Subset compress(Subset s, Subset keep) {
  std::uint32_t out = 0;
  int k = 0;
  keep.for_each([&](int p) {
    if (s.contains(p)) out |= std::uint32_t{1} << k;
    ++k;
  });
  return Subset(out);
}

}  // namespace

TopoModel submodel(const TopoModel& model, Subset keep) {
  const TopoFrame& frame = model.frame();
  keep &= frame.space().all();
  if (keep.empty()) throw ModelError("submodel must keep at least one point");

  PointSpace space(frame.space().names(keep));
  std::vector<Subset> family;
  for (Subset u : frame.topology().opens()) family.push_back(compress(u, keep));
  Topology top = Topology::from_subbase(space, family);

  const int n = space.size();
  const int a = frame.num_agents();
  std::vector<NamedFunction> gens;
  for (const auto& g : frame.generators()) {
    std::vector<Subset> table(static_cast<std::size_t>(n) * a);
    Subset domain = compress(g.theta.domain(), keep);
    int k = 0;
    keep.for_each([&](int p) {
      for (int i = 0; i < a; ++i) table[static_cast<std::size_t>(k) * a + i] = compress(g.theta.raw_cell(p, i), keep);
      ++k;
    });
    gens.push_back({g.name, NeighbourhoodFunction(n, a, domain, std::move(table))});
  }

  std::map<PropId, Subset> val;
  for (const auto& [p, s] : model.valuation()) val.emplace(p, compress(s, keep));
  return TopoModel(TopoFrame(std::move(top), frame.agents(), std::move(gens)), std::move(val));
}

}  // namespace topal
