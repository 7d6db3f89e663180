#include <algorithm>
#include <set>
#include <unordered_map>

#include "topal/error.hpp"
#include "topal/testkit.hpp"

namespace topal {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kTrue: return "true";
    case Verdict::kFalse: return "false";
    case Verdict::kUnknown: return "unknown";
  }
  return "unknown";
}

// Formulas with equal extensions under theta have equal extensions in
// every context built from them, so one representative per extension is
// enough; the first one reached is the smallest.
OracleResult box_oracle(const TopoModel& m, const Situation& s, const Formula& f, int bound) {
  if (f.op() != Op::kBox) throw Error("box_oracle needs a box formula");
  const Formula& body = f.arg();
  Evaluator ev(m);
  ev.check_vocabulary(f);
  const NeighbourhoodFunction& theta = s.theta;
  if (!theta.defined_at(s.point)) throw EvalError("point is outside the domain of the neighbourhood function");
  const Topology& top = m.topology();

  OracleResult result;
  std::unordered_map<Subset, Formula> seen;
  std::set<Subset> realized;
  std::vector<std::vector<std::pair<Formula, Subset>>> levels(static_cast<std::size_t>(std::max(bound, 0)) + 1);

  // Returns true when the candidate refutes the box.
  auto consider = [&](std::size_t level, Formula cand) {
    const Subset ext = ev.extension(theta, cand);
    if (seen.count(ext)) return false;
    seen.emplace(ext, cand);
    levels[level].emplace_back(cand, ext);
    const Subset u = top.interior(ext);
    if (!realized.insert(u).second || !u.contains(s.point)) return false;
    if (ev.evaluate(s, announce(cand, body))) return false;
    result.refutation = cand;
    return true;
  };

  std::vector<PropId> atoms;
  for (const auto& [p, v] : m.valuation()) atoms.push_back(p);
  if (atoms.empty()) atoms.emplace_back(kFalsumAtom);

  auto finish = [&](Verdict v) {
    result.verdict = v;
    result.distinct_extensions = seen.size();
    result.realized_updates = realized.size();
    return result;
  };

  const auto family_opens = ev.definable_family(theta)->open_members(top);
  result.definable_opens = family_opens.size();

  for (int k = 1; k <= bound; ++k) {
    const auto level = static_cast<std::size_t>(k);
    if (k == 1) {
      for (const auto& p : atoms)
        if (consider(level, atom(p))) return finish(Verdict::kFalse);
      continue;
    }
    // Copies: consider() appends to levels[level] only, never to earlier levels.
    for (const auto& [g, ext] : std::vector(levels[level - 1])) {
      if (consider(level, neg(g))) return finish(Verdict::kFalse);
      for (const auto& i : m.frame().agents())
        if (consider(level, know(i, g))) return finish(Verdict::kFalse);
      if (consider(level, interior(g))) return finish(Verdict::kFalse);
    }
    for (int a = 1; a < k; ++a) {
      const auto& left = levels[static_cast<std::size_t>(a)];
      const auto& right = levels[static_cast<std::size_t>(k - a)];
      for (std::size_t x = 0; x < left.size(); ++x)
        for (std::size_t y = 0; y < right.size(); ++y)
          if (consider(level, conj(left[x].first, right[y].first))) return finish(Verdict::kFalse);
    }
  }

  if (realized.size() == family_opens.size()) return finish(Verdict::kTrue);
  return finish(Verdict::kUnknown);
}

}  // namespace topal
