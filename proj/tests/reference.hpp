// Naive reference implementations used as test oracles. They follow the
// definitions pointwise and share no code with the library's evaluator,
// topology closure or definable-family search.
#ifndef TOPAL_TESTS_REFERENCE_HPP_
#define TOPAL_TESTS_REFERENCE_HPP_

#include <cstdint>
#include <set>
#include <vector>

#include "topal/formula.hpp"
#include "topal/model.hpp"

namespace ref {

using Family = std::set<std::uint32_t>;

// Adds the empty set and the space, then closes under pairwise meets and
// joins until nothing changes.
inline Family closure(int n, const std::vector<std::uint32_t>& subbase) {
  const std::uint32_t all = n >= 32 ? ~0u : (1u << n) - 1;
  Family fam(subbase.begin(), subbase.end());
  fam.insert(0);
  fam.insert(all);
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<std::uint32_t> cur(fam.begin(), fam.end());
    for (auto a : cur)
      for (auto b : cur) {
        grew |= fam.insert(a & b).second;
        grew |= fam.insert(a | b).second;
      }
  }
  return fam;
}

inline std::uint32_t interior(const topal::Topology& t, std::uint32_t s) {
  std::uint32_t out = 0;
  for (auto u : t.opens())
    if ((u.bits() & ~s) == 0) out |= u.bits();
  return out;
}

inline bool has(std::uint32_t s, int x) { return (s >> x) & 1u; }

struct Evaluator {
  const topal::TopoModel& m;
  bool effort = false;

  int agent(const std::string& id) const {
    const auto& a = m.frame().agents();
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k] == id) return static_cast<int>(k);
    return -1;
  }

  std::uint32_t ext(const topal::NeighbourhoodFunction& th, const topal::Formula& f) const {
    std::uint32_t out = 0;
    for (int x = 0; x < m.space().size(); ++x)
      if (th.defined_at(x) && truth(x, th, f)) out |= 1u << x;
    return out;
  }

  // Least family containing atom extensions, the empty set and the domain,
  // closed under relative complement, meet, every K_i and interior.
  Family definable(const topal::NeighbourhoodFunction& th) const {
    const std::uint32_t dom = th.domain().bits();
    Family fam{0, dom};
    for (const auto& [p, v] : m.valuation()) fam.insert(v.bits() & dom);
    for (bool grew = true; grew;) {
      grew = false;
      const std::vector<std::uint32_t> cur(fam.begin(), fam.end());
      for (auto a : cur) {
        grew |= fam.insert(dom & ~a).second;
        grew |= fam.insert(interior(m.topology(), a)).second;
        for (int i = 0; i < m.frame().num_agents(); ++i) {
          std::uint32_t k = 0;
          for (int x = 0; x < m.space().size(); ++x)
            if (has(dom, x) && (th.raw_cell(x, i).bits() & ~a) == 0) k |= 1u << x;
          grew |= fam.insert(k).second;
        }
        for (auto b : cur) grew |= fam.insert(a & b).second;
      }
    }
    return fam;
  }

  bool truth(int x, const topal::NeighbourhoodFunction& th, const topal::Formula& f) const {
    using topal::Op;
    switch (f.op()) {
      case Op::kAtom:
        return f.label() != topal::kFalsumAtom && has(m.truth_set(f.label()).bits(), x);
      case Op::kNot: return !truth(x, th, f.arg());
      case Op::kAnd: return truth(x, th, f.lhs()) && truth(x, th, f.rhs());
      case Op::kKnow: {
        const auto cell = th.raw_cell(x, agent(f.label())).bits();
        for (int y = 0; y < m.space().size(); ++y)
          if (has(cell, y) && !truth(y, th, f.arg())) return false;
        return true;
      }
      case Op::kInt: return has(interior(m.topology(), ext(th, f.arg())), x);
      case Op::kAnnounce: {
        const std::uint32_t u = interior(m.topology(), ext(th, f.lhs()));
        if (!has(u, x)) return true;
        return truth(x, topal::restrict_unchecked(th, topal::Subset(u)), f.rhs());
      }
      case Op::kBox: {
        std::vector<std::uint32_t> range;
        if (effort) {
          for (auto u : m.topology().opens())
            if (u.is_subset_of(th.domain())) range.push_back(u.bits());
        } else {
          for (auto u : definable(th))
            if (m.topology().is_open(topal::Subset(u))) range.push_back(u);
        }
        for (auto u : range)
          if (has(u, x) && !truth(x, topal::restrict_unchecked(th, topal::Subset(u)), f.arg())) return false;
        return true;
      }
    }
    return false;
  }

  bool valid(const topal::Formula& f) const {
    for (const auto& g : m.frame().generators())
      for (auto u : m.topology().opens()) {
        const auto th = topal::restrict_unchecked(g.theta, u);
        if (ext(th, f) != th.domain().bits()) return false;
      }
    return true;
  }
};

}  // namespace ref

#endif  // TOPAL_TESTS_REFERENCE_HPP_
