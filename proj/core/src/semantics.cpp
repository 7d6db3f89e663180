#include "topal/semantics.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

#include "topal/error.hpp"

namespace topal {

DefinableFamily::DefinableFamily(NeighbourhoodFunction theta, std::vector<DefinableMember> members)
    : theta_(std::move(theta)), members_(std::move(members)) {
  for (std::size_t k = 0; k < members_.size(); ++k) index_.emplace(members_[k].set, k);
}

const Formula* DefinableFamily::witness(Subset s) const {
  auto it = index_.find(s);
  return it == index_.end() ? nullptr : &members_[it->second].witness;
}

std::vector<Subset> DefinableFamily::open_members(const Topology& topology) const {
  std::vector<Subset> out;
  for (const auto& m : members_)
    if (topology.is_open(m.set)) out.push_back(m.set);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// How a family member was first reached with its smallest witness size.
struct Recipe {
  enum class Kind : std::uint8_t { kAtom, kFalse, kTrue, kNot, kKnow, kInt, kAnd };
  Recipe(Kind k = Kind::kFalse, int i = 0, Subset a = {}, Subset b = {}) : kind(k), agent(i), x(a), y(b) {}
  Kind kind;
  int agent;
  Subset x;
  Subset y;
  const PropId* atom = nullptr;
};

Subset know_operator(const NeighbourhoodFunction& theta, int agent, Subset s) {
  Subset out;
  theta.domain().for_each([&](int x) {
    if (theta.raw_cell(x, agent).is_subset_of(s)) out |= Subset::singleton(x);
  });
  return out;
}

}  // namespace

// Uniform-cost closure: sets are finalized in order of smallest witness
// size, so every witness is a minimum-size formula for its extension.
DefinableFamily compute_definable_family(const TopoModel& model, const NeighbourhoodFunction& theta) {
  constexpr std::uint64_t kUnreached = std::numeric_limits<std::uint64_t>::max();
  const TopoFrame& frame = model.frame();
  const Subset dom = theta.domain();
  const std::size_t universe = std::size_t{1} << frame.space().size();

  std::vector<std::uint64_t> best(universe, kUnreached);
  std::vector<bool> done(universe, false);
  std::vector<Recipe> recipe(universe);
  std::vector<std::optional<Formula>> witness(universe);

  using Entry = std::pair<std::uint64_t, std::uint32_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  auto relax = [&](Subset s, std::uint64_t cost, const Recipe& r) {
    if (done[s.bits()] || cost >= best[s.bits()]) return;
    best[s.bits()] = cost;
    recipe[s.bits()] = r;
    queue.emplace(cost, s.bits());
  };

  for (const auto& [p, v] : model.valuation()) {
    Recipe r{Recipe::Kind::kAtom};
    r.atom = &p;
    relax(v & dom, 1, r);
  }
  relax(Subset{}, falsum().size(), Recipe{Recipe::Kind::kFalse});
  relax(dom, verum().size(), Recipe{Recipe::Kind::kTrue});

  std::vector<Subset> finalized;
  std::vector<DefinableMember> members;
  while (!queue.empty()) {
    auto [cost, bits] = queue.top();
    queue.pop();
    if (done[bits] || cost != best[bits]) continue;
    done[bits] = true;
    const Subset s(bits);
    const Recipe& r = recipe[bits];
    Formula w = [&]() -> Formula {
      switch (r.kind) {
        case Recipe::Kind::kAtom: return atom(*r.atom);
        case Recipe::Kind::kFalse: return falsum();
        case Recipe::Kind::kTrue: return verum();
        case Recipe::Kind::kNot: return neg(*witness[r.x.bits()]);
        case Recipe::Kind::kKnow: return know(frame.agents()[r.agent], *witness[r.x.bits()]);
        case Recipe::Kind::kInt: return interior(*witness[r.x.bits()]);
        case Recipe::Kind::kAnd: return conj(*witness[r.x.bits()], *witness[r.y.bits()]);
      }
      return falsum();
    }();
    witness[bits] = w;
    members.push_back({s, std::move(w)});
    finalized.push_back(s);

    relax(dom.minus(s), cost + 1, Recipe{Recipe::Kind::kNot, 0, s});
    for (int i = 0; i < frame.num_agents(); ++i)
      relax(know_operator(theta, i, s), cost + 1, Recipe{Recipe::Kind::kKnow, i, s});
    relax(frame.topology().interior(s), cost + 1, Recipe{Recipe::Kind::kInt, 0, s});
    for (Subset f : finalized) {
      Subset meet = f & s;
      if (done[meet.bits()]) continue;
      relax(meet, cost + best[f.bits()], Recipe{Recipe::Kind::kAnd, 0, f, s});
    }
  }
  return DefinableFamily(theta, std::move(members));
}

Evaluator::Evaluator(const TopoModel& model) : model_(model) {}

int Evaluator::agent_index(const std::string& agent) const {
  int i = model_.frame().find_agent(agent);
  if (i < 0) throw EvalError("unknown agent '" + agent + "'");
  return i;
}

void Evaluator::check_vocabulary(const Formula& f) const {
  for (const auto& a : agents_of(f)) agent_index(a);
  for (const auto& p : atoms_of(f)) model_.truth_set(p);
}

Subset Evaluator::extension(const NeighbourhoodFunction& theta, const Formula& f, BoxMode mode) const {
  check_vocabulary(f);
  return eval(theta, f, mode);
}

bool Evaluator::evaluate(const Situation& s, const Formula& f, BoxMode mode) const {
  if (!s.theta.defined_at(s.point))
    throw EvalError("point " + std::to_string(s.point) + " is outside the domain of the neighbourhood function");
  return extension(s.theta, f, mode).contains(s.point);
}

NeighbourhoodFunction Evaluator::update(const NeighbourhoodFunction& theta, const Formula& f, BoxMode mode) const {
  return restrict_unchecked(theta, model_.topology().interior(extension(theta, f, mode)));
}

std::shared_ptr<const DefinableFamily> Evaluator::definable_family(const NeighbourhoodFunction& theta) const {
  {
    std::lock_guard lock(cache_mutex_);
    auto it = families_.find(theta);
    if (it != families_.end()) return it->second;
  }
  auto family = std::make_shared<const DefinableFamily>(compute_definable_family(model_, theta));
  std::lock_guard lock(cache_mutex_);
  return families_.emplace(theta, std::move(family)).first->second;
}

std::size_t Evaluator::cached_families() const {
  std::lock_guard lock(cache_mutex_);
  return families_.size();
}

const std::vector<NeighbourhoodFunction>& Evaluator::functions() const {
  std::call_once(phi_once_, [this] { phi_ = enumerate_phi(model_.frame()); });
  return phi_;
}

bool Evaluator::valid(const Formula& f, BoxMode mode) const {
  check_vocabulary(f);
  for (const auto& theta : functions())
    if (eval(theta, f, mode) != theta.domain()) return false;
  return true;
}

Subset Evaluator::quantify_box(const NeighbourhoodFunction& theta, const Formula& body, BoxMode mode) const {
  const Subset dom = theta.domain();
  Subset result = dom;
  auto after = [&](Subset u) {
    if (u.empty() || !result.intersects(u)) return;
    result &= dom.minus(u) | eval(restrict_unchecked(theta, u), body, mode);
  };
  if (mode == BoxMode::kAnnouncement) {
    for (Subset u : definable_family(theta)->open_members(model_.topology())) after(u);
  } else {
    for (Subset u : model_.topology().opens())
      if (u.is_subset_of(dom)) after(u);
  }
  return result;
}

Subset Evaluator::eval(const NeighbourhoodFunction& theta, const Formula& f, BoxMode mode) const {
  const Subset dom = theta.domain();
  if (dom.empty()) return dom;
  switch (f.op()) {
    case Op::kAtom:
      return model_.truth_set(f.label()) & dom;
    case Op::kNot:
      return dom.minus(eval(theta, f.arg(), mode));
    case Op::kAnd: {
      Subset lhs = eval(theta, f.lhs(), mode);
      if (lhs.empty()) return lhs;
      return lhs & eval(theta, f.rhs(), mode);
    }
    case Op::kKnow:
      return know_operator(theta, agent_index(f.label()), eval(theta, f.arg(), mode));
    case Op::kInt:
      return model_.topology().interior(eval(theta, f.arg(), mode));
    case Op::kAnnounce: {
      const Subset u = model_.topology().interior(eval(theta, f.lhs(), mode));
      if (u.empty()) return dom;
      return dom.minus(u) | eval(restrict_unchecked(theta, u), f.rhs(), mode);
    }
    case Op::kBox:
      return quantify_box(theta, f.arg(), mode);
  }
  return {};
}

bool evaluate(const TopoModel& m, const Situation& s, const Formula& f, BoxMode mode) {
  return Evaluator(m).evaluate(s, f, mode);
}

Subset extension(const TopoModel& m, const NeighbourhoodFunction& theta, const Formula& f, BoxMode mode) {
  return Evaluator(m).extension(theta, f, mode);
}

NeighbourhoodFunction update(const TopoModel& m, const NeighbourhoodFunction& theta, const Formula& f) {
  return Evaluator(m).update(theta, f);
}

bool valid_in_model(const TopoModel& m, const Formula& f, BoxMode mode) { return Evaluator(m).valid(f, mode); }

std::optional<Distinction> find_distinguishing(const TopoModel& m, std::span<const Formula> candidates) {
  Evaluator ev(m);
  for (const auto& f : candidates) {
    ev.check_vocabulary(f);
    for (const auto& theta : ev.functions()) {
      const Subset a = ev.extension(theta, f, BoxMode::kAnnouncement);
      const Subset e = ev.extension(theta, f, BoxMode::kEffort);
      if (a == e) continue;
      int point = -1;
      theta.domain().for_each([&](int x) {
        if (point < 0 && a.contains(x) != e.contains(x)) point = x;
      });
      return Distinction{{point, theta}, f, a.contains(point), e.contains(point)};
    }
  }
  return std::nullopt;
}

}  // namespace topal
