#ifndef TOPAL_REDUCE_HPP_
#define TOPAL_REDUCE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "topal/formula.hpp"

namespace topal {

/// Lexicographic (box-depth, size) measure.
struct Measure {
  std::uint32_t depth = 0;
  std::uint64_t size = 0;

  static Measure of(const Formula& f) { return {f.box_depth(), f.size()}; }
  friend auto operator<=>(const Measure&, const Measure&) = default;
};

/// One announcement-elimination step.
struct ReductionStep {
  std::string rule;                  ///< "R1" .. "R6"
  Formula before;                    ///< [a] b
  Formula after;                     ///< the rule's right-hand side
  Measure before_measure;
  std::vector<Formula> subproblems;  ///< formulas reduced next in place of `before`
  std::vector<Measure> subproblem_measures;
  bool decreasing = false;           ///< every subproblem is <^S_d `before`
};

/// Rewrites a Box-free formula into an equivalent announcement-free one by
/// pushing each announcement inward with the reduction axioms
///
///   [a]p      <-> (int(a) -> p)               R1
///   [a]~b     <-> (int(a) -> ~[a]b)           R2
///   [a](b & c) <-> [a]b & [a]c                R3
///   [a]int(b) <-> (int(a) -> int([a]b))       R4
///   [a]K_i b  <-> (int(a) -> K_i [a]b)        R5
///   [a][b]c   <-> [~[a]~int(b)]c              R6
///
/// recursing on the body's shape. Throws FragmentError if f contains Box.
Formula reduce_to_el(const Formula& f);

/// The steps reduce_to_el performs, outermost first. Repeated subproblems
/// are reduced once and appear once.
std::vector<ReductionStep> reduction_trace(const Formula& f);

}  // namespace topal

#endif  // TOPAL_REDUCE_HPP_
