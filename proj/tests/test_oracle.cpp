#include <gtest/gtest.h>

#include "zsum/oracle.hpp"
#include "zsum/parse.hpp"
#include "zsum/tame.hpp"
#include "zsum/verify.hpp"

using namespace zsum;

namespace {

void census(const AlphabetPtr& a, std::size_t bound) {
  ScanBound b;
  b.max_element_length = bound;
  for (auto& e : detail::zero_sum_elements(*a, b, false)) {
    const Sequence s(a, e);
    SCOPED_TRACE(to_string(s));
    EXPECT_EQ(is_atom(s), oracle::naive_is_atom(s));
    const auto z = factorizations(s);
    const auto nz = oracle::naive_factorizations(s);
    ASSERT_EQ(detail::to_naive(z), nz);
    EXPECT_EQ(z.lengths(), oracle::naive_length_set(nz));
    const auto info = catenary_info(z);
    EXPECT_EQ(info.catenary, oracle::naive_catenary(nz));
    EXPECT_EQ(info.minimal_relations, oracle::naive_minimal_relations(nz));
    for (std::size_t k = 0; k < z.atoms().size(); ++k)
      EXPECT_EQ(tame_over(z, k), oracle::naive_tame(nz, z.atoms()[k].exponents()));
  }
}

}  // namespace

TEST(OracleCensus, C3UpToLength8) { census(block_alphabet(normalize_spec({3})), 8); }
TEST(OracleCensus, C2xC2UpToLength8) { census(block_alphabet(normalize_spec({2, 2})), 8); }
TEST(OracleCensus, C4UpToLength8) { census(block_alphabet(normalize_spec({4})), 8); }
TEST(OracleCensus, C2Cubed7) { census(block_alphabet(normalize_spec({2, 2, 2})), 7); }
TEST(OracleCensus, KrullC3Doubled) { census(krull_alphabet(normalize_spec({3}), 2), 7); }

TEST(OracleCensus, InfiniteCyclicSupport) {
  const auto z = parse_group_spec("Z");
  std::vector<GroupElement> cls;
  for (const auto& [g, k] : parse_terms("g (-g) (2g) (-2g) (3g)", z)) cls.push_back(g);
  census(block_alphabet(cls), 8);
}

TEST(Oracle, KnownValues) {
  const auto a = block_alphabet(normalize_spec({3}));
  const auto nz = oracle::naive_factorizations(parse_sequence("g^3 -g^3", a));
  EXPECT_EQ(nz.size(), 2u);
  EXPECT_EQ(oracle::naive_catenary(nz), 3u);
  EXPECT_EQ(oracle::naive_minimal_relations(nz), (std::set<std::size_t>{3}));
  EXPECT_EQ(oracle::naive_tame(nz, {0, 3, 0}), 3u);
  EXPECT_TRUE(oracle::naive_is_atom(parse_sequence("g -g", a)));
  EXPECT_FALSE(oracle::naive_is_atom(parse_sequence("g^2 -g^2", a)));
}

TEST(Oracle, RefusesLargeInputs) {
  const auto a = block_alphabet(normalize_spec({2}));
  const auto big = parse_sequence("g^14", a);
  EXPECT_THROW(oracle::naive_factorizations(big), error);
  EXPECT_THROW(oracle::naive_is_atom(big), error);
}

TEST(Oracle, WeightedSumExhaustiveSearch) {
  const std::vector<std::int64_t> a{2, 3, 5}, x{6, 5, 3};  // 12 + 15 + 15 = 42 != 60
  EXPECT_FALSE(oracle::naive_decompose_weighted_sum(a, x, 2).has_value());
  const std::vector<std::int64_t> x2{9, 9, 3};  // 18 + 27 + 15 = 60
  const auto rows = oracle::naive_decompose_weighted_sum(a, x2, 2);
  ASSERT_TRUE(rows.has_value());
  EXPECT_TRUE(oracle::valid_weighted_decomposition(a, x2, 2, *rows));
  const auto fast = decompose_weighted_sum(a, x2, 2);
  EXPECT_TRUE(oracle::valid_weighted_decomposition(a, x2, 2, fast));
}
