#include <algorithm>
#include <numeric>

#include "topal/error.hpp"
#include "topal/testkit.hpp"

namespace topal {

void GenConfig::check() const {
  if (max_points < 1 || max_points > 12) throw Error("max_points must be in 1..12");
  if (num_agents < 1 || num_agents > 3) throw Error("num_agents must be in 1..3");
  if (num_atoms < 1 || num_atoms > 4) throw Error("num_atoms must be in 1..4");
  if (max_formula_size < 1) throw Error("max_formula_size must be positive");
  if (!(subbase_density >= 0.0 && subbase_density <= 1.0)) throw Error("subbase_density must be in [0,1]");
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t v;
  do v = next();
  while (v >= limit);
  return v % n;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 over the pair
  std::uint64_t z = seed * 0x9e3779b97f4a7c15ULL + index + 0x632be59bd9b4e019ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<PropId> config_atoms(const GenConfig& cfg) {
  static const std::vector<PropId> kAtoms{"p", "q", "r", "s"};
  return {kAtoms.begin(), kAtoms.begin() + cfg.num_atoms};
}

std::vector<AgentId> config_agents(const GenConfig& cfg) {
  static const std::vector<AgentId> kAgents{"a", "b", "c"};
  return {kAgents.begin(), kAgents.begin() + cfg.num_agents};
}

namespace {

Subset random_subset(Rng& rng, int n) { return Subset(static_cast<std::uint32_t>(rng.next())) & Subset::full(n); }

// Merges overlapping members of an open cover; unions of opens stay open
// and the resulting blocks partition the space.
std::vector<Subset> coarsen(std::vector<Subset> cover) {
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t a = 0; a < cover.size() && !merged; ++a)
      for (std::size_t b = a + 1; b < cover.size(); ++b)
        if (cover[a].intersects(cover[b])) {
          cover[a] |= cover[b];
          cover.erase(cover.begin() + static_cast<std::ptrdiff_t>(b));
          merged = true;
          break;
        }
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

std::vector<Subset> random_partition(Rng& rng, const Topology& top) {
  const int n = top.space().size();
  std::vector<Subset> cover;
  for (int p = 0; p < n; ++p) cover.push_back(top.minimal_neighbourhood(p));
  const int extra = rng.range(0, 2);
  for (int k = 0; k < extra; ++k) cover.push_back(rng.pick(top.opens()));
  auto blocks = coarsen(std::move(cover));
  while (blocks.size() > 1 && rng.chance(0.3)) {
    const std::size_t a = rng.below(blocks.size());
    std::size_t b = rng.below(blocks.size() - 1);
    if (b >= a) ++b;
    blocks[a] |= blocks[b];
    blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(b));
  }
  return blocks;
}

TopoModel try_random_model(const GenConfig& cfg, Rng& rng) {
  const int n = rng.range(1, cfg.max_points);
  std::vector<std::string> ids;
  for (int p = 0; p < n; ++p) ids.push_back("w" + std::to_string(p));
  PointSpace space(std::move(ids));

  std::vector<Subset> subbase;
  for (int k = 0; k < 2 * n; ++k)
    if (rng.chance(cfg.subbase_density)) subbase.push_back(random_subset(rng, n));
  Topology top = Topology::from_subbase(space, subbase);

  const auto agents = config_agents(cfg);
  std::vector<NamedFunction> gens;
  const int num_gens = rng.range(1, 2);
  for (int g = 0; g < num_gens; ++g) {
    std::vector<std::vector<Subset>> cells;
    for (std::size_t i = 0; i < agents.size(); ++i) cells.push_back(random_partition(rng, top));
    gens.push_back({"g" + std::to_string(g), NeighbourhoodFunction::from_partitions(n, cells)});
  }

  std::map<PropId, Subset> val;
  for (const auto& p : config_atoms(cfg)) val.emplace(p, random_subset(rng, n));
  return TopoModel(TopoFrame(std::move(top), agents, std::move(gens)), std::move(val));
}

}  // namespace

TopoModel random_model(const GenConfig& cfg, Rng& rng) {
  cfg.check();
  constexpr int kAttempts = 16;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    TopoModel m = try_random_model(cfg, rng);
    if (validate(m).empty()) return m;
  }
  throw Error("random_model: no valid model after " + std::to_string(kAttempts) + " attempts");
}

TopoModel random_model(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  return random_model(cfg, rng);
}

Formula random_formula(Rng& rng, Fragment fragment, const std::vector<PropId>& atoms,
                       const std::vector<AgentId>& agents, std::uint64_t max_size) {
  enum Shape { kAtom, kNot, kAnd, kKnow, kInt, kAnnounce, kBox };
  std::function<Formula(std::uint64_t)> gen = [&](std::uint64_t budget) -> Formula {
    if (budget <= 1 || rng.chance(0.15)) return atom(rng.pick(atoms));
    std::vector<Shape> shapes{kNot, kAnd, kAnd, kKnow, kInt};
    if (fragment != Fragment::kEL && budget >= 5) shapes.push_back(kAnnounce);
    if (fragment == Fragment::kAPAL) shapes.push_back(kBox);
    switch (rng.pick(shapes)) {
      case kNot: return neg(gen(budget - 1));
      case kAnd: {
        const auto left = 1 + rng.below(budget - 1);
        Formula l = gen(left);
        return conj(std::move(l), gen(budget - left));
      }
      case kKnow: {
        const AgentId& i = rng.pick(agents);
        return know(i, gen(budget - 1));
      }
      case kInt: return interior(gen(budget - 1));
      case kAnnounce: {
        const auto body = 1 + rng.below((budget - 1) / 4);
        Formula a = gen(budget - 4 * body);
        return announce(std::move(a), gen(body));
      }
      case kBox: return box(gen(budget - 1));
      case kAtom: break;
    }
    return atom(rng.pick(atoms));
  };
  return gen(1 + rng.below(max_size));
}

Formula random_formula(const GenConfig& cfg, Fragment fragment, Rng& rng) {
  cfg.check();
  return random_formula(rng, fragment, config_atoms(cfg), config_agents(cfg),
                        static_cast<std::uint64_t>(cfg.max_formula_size));
}

Formula random_formula(const GenConfig& cfg, Fragment fragment) {
  Rng rng(cfg.seed);
  return random_formula(cfg, fragment, rng);
}

NecessityForm random_necessity_form(Rng& rng, int depth, const std::vector<PropId>& atoms,
                                    const std::vector<AgentId>& agents, std::uint64_t max_size) {
  if (depth <= 0 || rng.chance(0.25)) return NecessityForm::hole();
  NecessityForm inner = random_necessity_form(rng, depth - 1, atoms, agents, max_size);
  switch (rng.below(4)) {
    case 0: {
      Formula a = random_formula(rng, Fragment::kPAL, atoms, agents, max_size);
      return NecessityForm::implies(std::move(a), std::move(inner));
    }
    case 1: return NecessityForm::know(rng.pick(agents), std::move(inner));
    case 2: return NecessityForm::interior(std::move(inner));
    default: {
      Formula a = random_formula(rng, Fragment::kPAL, atoms, agents, max_size);
      return NecessityForm::announce(std::move(a), std::move(inner));
    }
  }
}

}  // namespace topal
