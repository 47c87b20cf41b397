#include <gtest/gtest.h>

#include <random>
#include <set>

#include "zsum/group.hpp"

using namespace zsum;

namespace {

std::vector<std::int64_t> torsion_of(const GroupSpec& g) { return {g.torsion().begin(), g.torsion().end()}; }

}  // namespace

TEST(GroupSpec, NormalizesToInvariantFactors) {
  EXPECT_EQ(torsion_of(normalize_spec({2, 3})), (std::vector<std::int64_t>{6}));
  EXPECT_EQ(torsion_of(normalize_spec({4, 6})), (std::vector<std::int64_t>{2, 12}));
  EXPECT_EQ(torsion_of(normalize_spec({2, 2, 2})), (std::vector<std::int64_t>{2, 2, 2}));
  EXPECT_EQ(torsion_of(normalize_spec({6, 10, 15})), (std::vector<std::int64_t>{30, 30}));
  EXPECT_EQ(torsion_of(normalize_spec({1, 1})), (std::vector<std::int64_t>{}));
}

TEST(GroupSpec, NormalizationPreservesOrder) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::int64_t> raw(1 + rng() % 4);
    std::int64_t order = 1;
    for (auto& n : raw) {
      n = 1 + static_cast<std::int64_t>(rng() % 12);
      order *= n;
    }
    const auto g = normalize_spec(raw);
    EXPECT_EQ(g.order(), static_cast<std::uint64_t>(order));
    const auto t = g.torsion();
    for (std::size_t i = 1; i < t.size(); ++i) EXPECT_EQ(t[i] % t[i - 1], 0);
  }
}

TEST(GroupSpec, BasicQueries) {
  const auto c23 = parse_group_spec("C2^3");
  EXPECT_EQ(c23.rank(), 3u);
  EXPECT_EQ(c23.order(), 8u);
  EXPECT_EQ(c23.exponent(), 2);
  EXPECT_TRUE(c23.is_finite());
  EXPECT_FALSE(c23.is_cyclic());
  EXPECT_EQ(c23.to_string(), "C2^3");

  const auto z = parse_group_spec("Z");
  EXPECT_FALSE(z.is_finite());
  EXPECT_EQ(z.free_rank(), 1u);
  EXPECT_TRUE(z.is_cyclic());

  EXPECT_TRUE(parse_group_spec("C1").is_trivial());
  EXPECT_EQ(parse_group_spec("C4xC6"), normalize_spec({4, 6}));
  EXPECT_EQ(parse_group_spec("c3xc3").to_string(), "C3^2");
}

TEST(GroupSpec, RejectsMalformedText) {
  for (const char* bad : {"", "C", "C0", "C-2", "Q3", "C2^", "C2^0", "C2x", "Z^x"}) {
    EXPECT_THROW(parse_group_spec(bad), error) << bad;
  }
}

TEST(GroupElement, ArithmeticIsModular) {
  const auto c6 = normalize_spec({6});
  const auto g = parse_element(c6, "g");
  EXPECT_EQ(scale(6, g), zero(c6));
  EXPECT_EQ(scale(-1, g), parse_element(c6, "5g"));
  EXPECT_EQ(to_string(scale(5, g)), "-g");
  EXPECT_EQ(*order(scale(2, g)), 3u);
  EXPECT_EQ(*order(zero(c6)), 1u);
}

TEST(GroupElement, InfiniteOrder) {
  const auto z = parse_group_spec("Z");
  const auto g = parse_element(z, "g");
  EXPECT_FALSE(order(g).has_value());
  EXPECT_EQ(to_string(scale(-4, g)), "-4g");
  EXPECT_EQ(parse_element(z, "-4g"), scale(-4, g));
}

TEST(GroupElement, StandardBasisWithSum) {
  const auto c23 = normalize_spec({2, 2, 2});
  const auto e = standard_basis(c23, true);
  ASSERT_EQ(e.size(), 4u);
  EXPECT_EQ(e[0], e[1] + e[2] + e[3]);
  EXPECT_EQ(parse_element(c23, "e0"), e[0]);
  EXPECT_EQ(to_string(e[0]), "(1,1,1)");
  EXPECT_EQ(parse_element(c23, "(1,0,1)"), e[1] + e[3]);
}

TEST(GroupElement, ParseRoundTripsOverWholeGroups) {
  for (auto spec : {normalize_spec({5}), normalize_spec({2, 4}), normalize_spec({3, 3})}) {
    std::set<GroupElement> seen;
    for (const auto& g : elements(spec)) {
      EXPECT_EQ(parse_element(spec, to_string(g)), g);
      seen.insert(g);
    }
    EXPECT_EQ(seen.size(), spec.order());
  }
}

TEST(GroupElement, GroupAxiomsOnRandomTriples) {
  const auto spec = normalize_spec({2, 6});
  std::vector<GroupElement> all;
  for (const auto& g : elements(spec)) all.push_back(g);
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto& a = all[rng() % all.size()];
    const auto& b = all[rng() % all.size()];
    const auto& c = all[rng() % all.size()];
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(scale(3, a), a + a + a);
  }
}

TEST(TorsionIndexer, IndexIsABijection) {
  const auto spec = normalize_spec({2, 2, 4});
  const TorsionIndexer ix(spec);
  ASSERT_EQ(ix.size(), 16u);
  for (std::uint64_t i = 0; i < ix.size(); ++i) {
    EXPECT_EQ(ix.index_of(ix.element_at(i)), i);
    EXPECT_EQ(ix.element_at(ix.neg(i)), neg(ix.element_at(i)));
  }
}

TEST(GroupElement, MismatchedSpecsThrow) {
  const auto a = parse_element(normalize_spec({3}), "g");
  const auto b = parse_element(normalize_spec({4}), "g");
  try {
    (void)(a + b);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::incompatible_elements);
  }
}
