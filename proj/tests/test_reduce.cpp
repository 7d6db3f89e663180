#include <gtest/gtest.h>

#include "reference.hpp"
#include "topal/error.hpp"
#include "topal/formula_io.hpp"
#include "topal/reduce.hpp"
#include "topal/testkit.hpp"

using namespace topal;

namespace {

Formula P(const char* text) { return parse_formula(text); }

std::vector<std::string> rules(const std::vector<ReductionStep>& steps) {
  std::vector<std::string> out;
  for (const auto& s : steps) out.push_back(s.rule);
  return out;
}

}  // namespace

TEST(Reduce, AtomicBody) { EXPECT_EQ(to_string(reduce_to_el(P("[p] q"))), "int(p) -> q"); }

TEST(Reduce, KnowledgeBody) {
  EXPECT_EQ(reduce_to_el(P("[p] K_a q")), P("int(p) -> K_a (int(p) -> q)"));
}

TEST(Reduce, NestedAnnouncementsGoThroughComposition) {
  EXPECT_EQ(reduce_to_el(P("[p][q] r")), reduce_to_el(P("[~[p]~int(q)] r")));
}

TEST(Reduce, LeavesEpistemicFormulasAlone) {
  const Formula f = P("K_a (p & int(~q))");
  EXPECT_EQ(reduce_to_el(f), f);
}

TEST(Reduce, RejectsBox) {
  EXPECT_THROW(reduce_to_el(P("[p] box q")), FragmentError);
  EXPECT_THROW(reduce_to_el(P("box q")), FragmentError);
  EXPECT_THROW(reduction_trace(P("[box p] q")), FragmentError);
}

TEST(Trace, Examples) {
  EXPECT_EQ(rules(reduction_trace(P("[p] q"))), std::vector<std::string>{"R1"});
  EXPECT_EQ(rules(reduction_trace(P("[p] ~q"))), (std::vector<std::string>{"R2", "R1"}));
  const auto steps = reduction_trace(P("[p][q] r"));
  ASSERT_FALSE(steps.empty());
  EXPECT_EQ(steps.front().rule, "R6");
  EXPECT_TRUE(steps.front().decreasing);
  ASSERT_EQ(steps.front().subproblems.size(), 1u);
  EXPECT_EQ(steps.front().subproblems[0], P("[~[p]~int(q)] r"));
  EXPECT_LT(Measure::of(steps.front().subproblems[0]), Measure::of(P("[p][q] r")));
}

TEST(Trace, EveryRuleAppears) {
  EXPECT_EQ(rules(reduction_trace(P("[p] (q & r)"))), (std::vector<std::string>{"R3", "R1", "R1"}));
  EXPECT_EQ(reduction_trace(P("[p] int(q)")).front().rule, "R4");
  EXPECT_EQ(reduction_trace(P("[p] K_a q")).front().rule, "R5");
}

TEST(Trace, MeasuresDecreaseOnRandomFormulas) {
  Rng rng(71);
  for (int k = 0; k < 400; ++k) {
    const Formula f = random_formula(rng, Fragment::kPAL, {"p", "q", "r"}, {"a", "b"}, 25);
    for (const auto& s : reduction_trace(f)) {
      EXPECT_TRUE(s.decreasing) << s.rule << " on " << to_string(s.before);
      EXPECT_EQ(s.before_measure, Measure::of(s.before));
      for (std::size_t i = 0; i < s.subproblems.size(); ++i) {
        EXPECT_EQ(s.subproblem_measures[i], Measure::of(s.subproblems[i]));
        EXPECT_TRUE(compare(s.subproblems[i], s.before).less_size_depth);
      }
    }
  }
}

TEST(Reduce, OutputIsAnnouncementFreeAndIdempotent) {
  Rng rng(73);
  for (int k = 0; k < 400; ++k) {
    const Formula f = random_formula(rng, Fragment::kPAL, {"p", "q", "r"}, {"a", "b"}, 25);
    const Formula r = reduce_to_el(f);
    EXPECT_TRUE(in_el(r)) << to_string(f);
    EXPECT_EQ(reduce_to_el(r), r);
  }
}

TEST(Reduce, PreservesTruthAgainstPointwiseReference) {
  Rng rng(79);
  GenConfig cfg;
  for (int trial = 0; trial < 60; ++trial) {
    const TopoModel m = random_model(cfg, rng);
    const ref::Evaluator naive{m, false};
    for (int k = 0; k < 6; ++k) {
      const Formula f = random_formula(rng, Fragment::kPAL, config_atoms(cfg), config_agents(cfg), 20);
      EXPECT_TRUE(naive.valid(iff(f, reduce_to_el(f)))) << to_string(f);
    }
  }
}
