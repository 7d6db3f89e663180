#include <gtest/gtest.h>

#include "reference.hpp"
#include "topal/error.hpp"
#include "topal/model_io.hpp"
#include "topal/testkit.hpp"
#include "topal/topology.hpp"

using namespace topal;

namespace {

std::vector<std::uint32_t> bits_of(const std::vector<Subset>& v) {
  std::vector<std::uint32_t> out;
  for (Subset s : v) out.push_back(s.bits());
  return out;
}

Topology abc_topology() {
  PointSpace space({"a", "b", "c"});
  const std::vector<std::string> ab{"a", "b"}, bc{"b", "c"};
  const Subset sub[] = {space.subset(ab), space.subset(bc)};
  return Topology::from_subbase(space, sub);
}

const Topology& jewel_topology() {
  static const TopoModel m = jewel_model();
  return m.topology();
}

Subset jewel_set(std::initializer_list<const char*> ids) {
  std::vector<std::string> v(ids.begin(), ids.end());
  return jewel_topology().space().subset(v);
}

}  // namespace

TEST(FromSubbase, OverlappingPairMatchesBruteForceClosure) {
  const Topology t = abc_topology();
  const auto expected = ref::closure(3, {0b011, 0b110});
  const auto opens = bits_of(t.opens());
  EXPECT_EQ(ref::Family(opens.begin(), opens.end()), expected);
  // {}, {b}, {a,b}, {b,c}, {a,b,c}
  EXPECT_EQ(opens, (std::vector<std::uint32_t>{0b000, 0b010, 0b011, 0b110, 0b111}));
}

TEST(FromSubbase, EmptySubbaseIsIndiscrete) {
  const Topology t = Topology::from_subbase(PointSpace({"x", "y", "z"}), {});
  EXPECT_EQ(bits_of(t.opens()), (std::vector<std::uint32_t>{0, 0b111}));
}

TEST(FromSubbase, JewelHasAllUnionsOfFiveCells) {
  const Topology& t = jewel_topology();
  EXPECT_EQ(t.opens().size(), 32u);
  const Subset cells[] = {jewel_set({"000", "100", "001", "101"}), jewel_set({"010"}), jewel_set({"110"}),
                          jewel_set({"011"}), jewel_set({"111"})};
  for (std::uint32_t pick = 0; pick < 32; ++pick) {
    Subset u;
    for (int k = 0; k < 5; ++k)
      if ((pick >> k) & 1u) u |= cells[k];
    EXPECT_TRUE(t.is_open(u));
  }
}

TEST(FromSubbase, RejectsMembersOutsideSpace) {
  const Subset sub[] = {Subset(0b1000)};
  EXPECT_THROW(Topology::from_subbase(PointSpace({"a", "b", "c"}), sub), ModelError);
}

TEST(FromSubbase, RandomSubbasesMatchBruteForceClosure) {
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rng.range(1, 7);
    std::vector<std::string> ids;
    for (int k = 0; k < n; ++k) ids.push_back("x" + std::to_string(k));
    std::vector<Subset> sub;
    std::vector<std::uint32_t> raw;
    for (int k = rng.range(0, 5); k > 0; --k) {
      const auto b = static_cast<std::uint32_t>(rng.below(1u << n));
      sub.push_back(Subset(b));
      raw.push_back(b);
    }
    const Topology t = Topology::from_subbase(PointSpace(ids), sub);
    const auto opens = bits_of(t.opens());
    EXPECT_EQ(ref::Family(opens.begin(), opens.end()), ref::closure(n, raw));
    EXPECT_TRUE(t.check().empty());
    for (Subset s : sub) EXPECT_TRUE(t.is_open(s));
    // Re-closing the opens gives the same topology.
    const Topology again = Topology::from_subbase(t.space(), t.opens());
    EXPECT_EQ(again.opens(), t.opens());
  }
}

TEST(Interior, JewelExamples) {
  const Topology& t = jewel_topology();
  EXPECT_EQ(t.interior(jewel_set({"000", "100"})), Subset{});
  EXPECT_EQ(t.interior(jewel_set({"111", "110", "000"})), jewel_set({"111", "110"}));
  EXPECT_EQ(ref::interior(t, jewel_set({"111", "110", "000"}).bits()), jewel_set({"111", "110"}).bits());
  for (Subset u : t.opens()) EXPECT_EQ(t.interior(u), u);
}

TEST(Interior, RejectsSetsOutsideSpace) { EXPECT_THROW(abc_topology().interior(Subset(0b1000)), ModelError); }

TEST(Interior, PropertiesOnRandomTopologies) {
  GenConfig cfg;
  cfg.max_points = 7;
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const TopoModel m = random_model(cfg, rng);
    const Topology& t = m.topology();
    const auto n = static_cast<std::uint32_t>(t.space().size());
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
      const Subset in = t.interior(Subset(s));
      EXPECT_EQ(in.bits(), ref::interior(t, s));
      EXPECT_EQ(in, interior_by_scan(t, Subset(s)));
      EXPECT_TRUE(t.is_open(in));
      EXPECT_TRUE(in.is_subset_of(Subset(s)));
      EXPECT_EQ(t.interior(in), in);
      EXPECT_EQ(in == Subset(s), t.is_open(Subset(s)));
      // Monotone: dropping a point never grows the interior.
      for (int x = 0; x < static_cast<int>(n); ++x)
        EXPECT_TRUE(t.interior(Subset(s).minus(Subset::singleton(x))).is_subset_of(in));
    }
  }
}

TEST(MinimalNeighbourhood, IsSmallestOpenContainingPoint) {
  const Topology t = abc_topology();
  EXPECT_EQ(t.minimal_neighbourhood(0), Subset(0b011));
  EXPECT_EQ(t.minimal_neighbourhood(1), Subset(0b010));
  EXPECT_EQ(t.minimal_neighbourhood(2), Subset(0b110));
}

TEST(IsBase, Examples) {
  const Topology& t = jewel_topology();
  const Subset cells[] = {jewel_set({"000", "100", "001", "101"}), jewel_set({"010"}), jewel_set({"110"}),
                          jewel_set({"011"}), jewel_set({"111"})};
  EXPECT_TRUE(t.is_base(cells));
  EXPECT_TRUE(t.is_base(t.opens()));
  const Subset one[] = {jewel_set({"111"})};
  EXPECT_FALSE(t.is_base(one));
  const Subset not_open[] = {jewel_set({"000"})};
  EXPECT_THROW(t.is_base(not_open), ModelError);
}

TEST(Check, ReportsBrokenFamilies) {
  PointSpace space({"a", "b", "c"});
  EXPECT_FALSE(Topology::from_family(space, {Subset(0), Subset(0b011), Subset(0b110), Subset(0b111)}).check().empty());
  EXPECT_FALSE(Topology::from_family(space, {Subset(0b111)}).check().empty());
  EXPECT_TRUE(Topology::from_family(space, {Subset(0), Subset(0b111)}).check().empty());
}

TEST(PointSpace, Basics) {
  PointSpace s({"u", "v"});
  EXPECT_EQ(s.index_of("v"), 1);
  EXPECT_THROW(s.index_of("w"), ModelError);
  EXPECT_EQ(s.format(Subset(0b11)), "{u,v}");
  EXPECT_THROW(PointSpace({}), ModelError);
  EXPECT_THROW(PointSpace({"a", "a"}), ModelError);
}
