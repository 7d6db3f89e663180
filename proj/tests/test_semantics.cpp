#include <gtest/gtest.h>

#include <thread>

#include "reference.hpp"
#include "topal/error.hpp"
#include "topal/formula_io.hpp"
#include "topal/model_io.hpp"
#include "topal/semantics.hpp"
#include "topal/testkit.hpp"

using namespace topal;

namespace {

struct Jewel {
  TopoModel m = jewel_model();
  NeighbourhoodFunction theta = m.frame().generator("theta");
  NeighbourhoodFunction prime = m.frame().generator("thetaPrime");
  int at(const char* id) const { return m.space().index_of(id); }
  Subset set(std::vector<std::string> ids) const { return m.space().subset(ids); }
};

const Jewel& jewel() {
  static const Jewel j;
  return j;
}

bool holds(const NeighbourhoodFunction& theta, const char* point, const char* formula) {
  const Jewel& j = jewel();
  return evaluate(j.m, {j.at(point), theta}, parse_formula(formula));
}

// A valid random model plus formulas over its vocabulary.
struct Instance {
  TopoModel m;
  std::vector<PropId> atoms;
  std::vector<AgentId> agents;
};

Instance random_instance(Rng& rng, int max_points = 4) {
  GenConfig cfg;
  cfg.max_points = max_points;
  Instance in{random_model(cfg, rng), config_atoms(cfg), config_agents(cfg)};
  return in;
}

}  // namespace

TEST(Jewel, FactsAtThetaPrime) {
  const auto& th = jewel().prime;
  EXPECT_TRUE(holds(th, "111", "K_e t"));
  EXPECT_TRUE(holds(th, "111", "K_e ~(K_i ~t | K_i t)"));
  EXPECT_TRUE(holds(th, "111", "K_e Khat_i ~(K_e t | K_e ~t)"));
  EXPECT_TRUE(holds(th, "111", "[j] (K_e (j & d & t) & K_i (j & d) & ~K_i (t | K_i ~t))"));
}

TEST(Jewel, FactsAtTheta) {
  EXPECT_TRUE(holds(jewel().theta, "111", "dia (K_e (j & d & t) & K_i (j & d & t))"));
  EXPECT_FALSE(holds(jewel().theta, "111", "K_e t"));
  EXPECT_TRUE(valid_in_model(jewel().m, parse_formula("~d -> box (~(K_e j | K_e ~j) & ~(K_e t | K_e ~t))")));
}

TEST(Jewel, UpdateByJ) {
  const Jewel& j = jewel();
  const Evaluator ev(j.m);
  EXPECT_EQ(ev.extension(j.prime, interior(atom("j"))), j.set({"111", "110"}));
  const NeighbourhoodFunction upd = ev.update(j.prime, atom("j"));
  EXPECT_EQ(upd.domain(), j.set({"111", "110"}));
  EXPECT_EQ(upd.cell(j.at("111"), j.m.frame().find_agent("e")), j.set({"111"}));
  EXPECT_EQ(upd.cell(j.at("111"), j.m.frame().find_agent("i")), j.set({"111", "110"}));
}

TEST(Jewel, EveryOpenIsDefinable) {
  const Jewel& j = jewel();
  const Evaluator ev(j.m);
  for (const auto* th : {&j.theta, &j.prime})
    EXPECT_EQ(ev.definable_family(*th)->open_members(j.m.topology()), j.m.topology().opens());
}

TEST(Evaluate, Errors) {
  const Jewel& j = jewel();
  const Evaluator ev(j.m);
  const NeighbourhoodFunction small = restrict(j.prime, j.set({"111"}), j.m.topology());
  EXPECT_THROW(ev.evaluate({j.at("000"), small}, atom("j")), EvalError);
  EXPECT_THROW(ev.evaluate({j.at("111"), j.theta}, parse_formula("K_z j")), EvalError);
  EXPECT_THROW(ev.evaluate({j.at("111"), j.theta}, parse_formula("zz")), EvalError);
  EXPECT_TRUE(ev.evaluate({j.at("111"), j.theta}, parse_formula("~false")));
}

TEST(Evaluate, AnnouncementOfUnannounceableFormulaIsVacuous) {
  const Jewel& j = jewel();
  // {000,100} has empty interior, so announcing it restricts to nothing.
  EXPECT_TRUE(holds(j.theta, "000", "[~d & ~t] false"));
  EXPECT_FALSE(holds(j.theta, "000", "int(~d & ~t)"));
}

TEST(Evaluate, MatchesPointwiseReference) {
  Rng rng(31);
  for (int trial = 0; trial < 120; ++trial) {
    const Instance in = random_instance(rng);
    const Evaluator ev(in.m);
    const ref::Evaluator announcement{in.m, false};
    const ref::Evaluator effort{in.m, true};
    for (int k = 0; k < 8; ++k) {
      const Formula f = random_formula(rng, Fragment::kAPAL, in.atoms, in.agents, 12);
      for (const auto& theta : ev.functions()) {
        EXPECT_EQ(ev.extension(theta, f).bits(), announcement.ext(theta, f)) << to_string(f);
        EXPECT_EQ(ev.extension(theta, f, BoxMode::kEffort).bits(), effort.ext(theta, f)) << to_string(f);
      }
    }
  }
}

TEST(DefinableFamily, MatchesNaiveFixpointAndWitnessesCheckOut) {
  Rng rng(37);
  for (int trial = 0; trial < 120; ++trial) {
    const Instance in = random_instance(rng, 5);
    const Evaluator ev(in.m);
    const ref::Evaluator naive{in.m, false};
    for (const auto& theta : ev.functions()) {
      const auto family = ev.definable_family(theta);
      ref::Family got;
      std::uint64_t last_size = 0;
      for (const auto& member : family->members()) {
        got.insert(member.set.bits());
        EXPECT_TRUE(in_el(member.witness));
        EXPECT_EQ(naive.ext(theta, member.witness), member.set.bits()) << to_string(member.witness);
        EXPECT_GE(member.witness.size(), last_size);
        last_size = member.witness.size();
      }
      EXPECT_EQ(got, naive.definable(theta));
      EXPECT_EQ(family->size(), got.size());
    }
  }
}

TEST(DefinableFamily, WitnessesAreSmallestAmongEnumeratedFormulas) {
  // Every EL formula up to size 5 over one atom and one agent; none may
  // define a member with a smaller formula than its witness.
  GenConfig cfg;
  cfg.num_agents = 1;
  cfg.num_atoms = 1;
  Rng rng(41);
  std::vector<std::vector<Formula>> by_size(6);
  by_size[1] = {atom("p")};
  for (int s = 2; s <= 5; ++s) {
    for (const auto& g : by_size[s - 1]) {
      by_size[s].push_back(neg(g));
      by_size[s].push_back(know("a", g));
      by_size[s].push_back(interior(g));
    }
    for (int a = 1; a < s; ++a)
      for (const auto& l : by_size[a])
        for (const auto& r : by_size[s - a]) by_size[s].push_back(conj(l, r));
  }
  for (int trial = 0; trial < 40; ++trial) {
    const TopoModel m = random_model(cfg, rng);
    const Evaluator ev(m);
    for (const auto& theta : ev.functions()) {
      const auto family = ev.definable_family(theta);
      for (int s = 1; s <= 5; ++s)
        for (const auto& f : by_size[s]) {
          const Formula* w = family->witness(ev.extension(theta, f));
          ASSERT_NE(w, nullptr);
          EXPECT_LE(w->size(), f.size());
        }
    }
  }
}

TEST(SemanticIdentities, OnRandomInstances) {
  Rng rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const Instance in = random_instance(rng);
    const Evaluator ev(in.m);
    const auto& phi_set = ev.functions();
    for (int k = 0; k < 4; ++k) {
      const Formula phi = random_formula(rng, Fragment::kAPAL, in.atoms, in.agents, 8);
      const Formula psi = random_formula(rng, Fragment::kAPAL, in.atoms, in.agents, 8);
      const Formula plain = random_formula(rng, Fragment::kEL, in.atoms, in.agents, 8);
      EXPECT_TRUE(ev.valid(iff(announce(phi, psi), announce(interior(phi), psi))));
      EXPECT_TRUE(ev.valid(iff(conj(interior(phi), dual_announce(phi, interior(psi))), dual_announce(phi, interior(psi)))));
      for (const auto& theta : phi_set) {
        const Subset ext_phi = ev.extension(theta, phi);
        EXPECT_EQ(ev.extension(theta, interior(phi)), in.m.topology().interior(ext_phi));
        EXPECT_EQ(ev.extension(ev.update(theta, phi), psi), ev.extension(theta, dual_announce(phi, psi)));
        EXPECT_EQ(ev.update(theta, phi), ev.update(theta, interior(phi)));
        EXPECT_EQ(ev.update(ev.update(theta, phi), psi), ev.update(theta, dual_announce(phi, interior(psi))));
        if (in_propositional(plain))
          for (const auto& other : phi_set) {
            const Subset both = theta.domain() & other.domain();
            EXPECT_EQ(ev.extension(theta, plain) & both, ev.extension(other, plain) & both);
          }
      }
    }
  }
}

TEST(SemanticIdentities, BoxClauseAgreesWithWitnessAnnouncements) {
  Rng rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const Instance in = random_instance(rng);
    const Evaluator ev(in.m);
    const Formula f = random_formula(rng, Fragment::kAPAL, in.atoms, in.agents, 8);
    for (const auto& theta : ev.functions()) {
      const auto family = ev.definable_family(theta);
      for (Subset u : family->open_members(in.m.topology())) {
        const Formula& w = *family->witness(u);
        const Subset announced = ev.extension(theta, announce(w, f));
        const Subset after = ev.extension(restrict(theta, u, in.m.topology()), f);
        u.for_each([&](int x) { EXPECT_EQ(announced.contains(x), after.contains(x)); });
      }
    }
  }
}

TEST(Validity, SchemaExamples) {
  const TopoModel& m = jewel().m;
  EXPECT_TRUE(valid_in_model(m, parse_formula("K_i j -> int(j)")));
  EXPECT_TRUE(valid_in_model(m, parse_formula("[j] false <-> ~int(j)")));
  EXPECT_FALSE(valid_in_model(m, parse_formula("j")));
}

TEST(Validity, AnnouncingFalsumIffNotAnnounceable) {
  Rng rng(53);
  for (int trial = 0; trial < 80; ++trial) {
    const Instance in = random_instance(rng);
    const Formula phi = random_formula(rng, Fragment::kAPAL, in.atoms, in.agents, 10);
    EXPECT_TRUE(valid_in_model(in.m, iff(announce(phi, falsum()), neg(interior(phi))))) << to_string(phi);
  }
}

TEST(Distinguish, JewelHasNoDistinction) {
  Rng rng(59);
  std::vector<Formula> candidates;
  for (int k = 0; k < 40; ++k)
    candidates.push_back(box(random_formula(rng, Fragment::kPAL, {"j", "d", "t"}, {"i", "e"}, 6)));
  EXPECT_FALSE(find_distinguishing(jewel().m, candidates).has_value());
}

TEST(Distinguish, SeparatingAtomsLeaveNoDistinction) {
  // Discrete valuation: every subset is definable from atoms alone.
  PointSpace space({"a", "b", "c"});
  const Subset sub[] = {Subset(0b011), Subset(0b110)};
  Topology t = Topology::from_subbase(space, sub);
  std::vector<NamedFunction> gens{{"g", NeighbourhoodFunction::from_partitions(3, {{Subset(0b111)}})}};
  const TopoModel m(TopoFrame(std::move(t), {"x"}, std::move(gens)),
                    {{"p", Subset(0b001)}, {"q", Subset(0b010)}, {"r", Subset(0b100)}});
  ASSERT_TRUE(validate(m).empty());
  Rng rng(61);
  std::vector<Formula> candidates;
  for (int k = 0; k < 40; ++k)
    candidates.push_back(box(random_formula(rng, Fragment::kPAL, {"p", "q", "r"}, {"x"}, 6)));
  EXPECT_FALSE(find_distinguishing(m, candidates).has_value());
}

TEST(Distinguish, ReportedDistinctionsAreGenuine) {
  // Whether the modes ever differ is open; any report must replay exactly.
  Rng rng(63);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance in = random_instance(rng, 4);
    std::vector<Formula> candidates;
    for (int k = 0; k < 20; ++k)
      candidates.push_back(box(random_formula(rng, Fragment::kAPAL, in.atoms, in.agents, 8)));
    const auto d = find_distinguishing(in.m, candidates);
    if (!d) continue;
    const Evaluator ev(in.m);
    EXPECT_EQ(ev.evaluate(d->situation, d->formula), d->announcement_value);
    EXPECT_EQ(ev.evaluate(d->situation, d->formula, BoxMode::kEffort), d->effort_value);
    EXPECT_NE(d->announcement_value, d->effort_value);
  }
}

TEST(Evaluator, ConcurrentQueriesAgree) {
  Rng rng(67);
  const Instance in = random_instance(rng, 5);
  std::vector<Formula> fs;
  for (int k = 0; k < 30; ++k) fs.push_back(random_formula(rng, Fragment::kAPAL, in.atoms, in.agents, 10));
  const Evaluator serial(in.m);
  std::vector<std::vector<Subset>> expected;
  for (const auto& f : fs) {
    std::vector<Subset> row;
    for (const auto& theta : serial.functions()) row.push_back(serial.extension(theta, f));
    expected.push_back(row);
  }
  const Evaluator shared(in.m);
  std::vector<std::thread> pool;
  std::vector<int> mismatches(4, 0);
  for (int w = 0; w < 4; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t k = 0; k < fs.size(); ++k)
        for (std::size_t t = 0; t < shared.functions().size(); ++t)
          if (shared.extension(shared.functions()[t], fs[(k + w) % fs.size()]) != expected[(k + w) % fs.size()][t])
            ++mismatches[w];
    });
  for (auto& th : pool) th.join();
  for (int w = 0; w < 4; ++w) EXPECT_EQ(mismatches[w], 0);
}
