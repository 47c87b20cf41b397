#include <gtest/gtest.h>

#include <map>

#include "zsum/factorize.hpp"
#include "zsum/invariants.hpp"
#include "zsum/parse.hpp"
#include "zsum/scan.hpp"

using namespace zsum;

namespace {

std::vector<Sequence> small_elements(const AlphabetPtr& a, std::size_t bound) {
  ScanBound b;
  b.max_element_length = bound;
  std::vector<Sequence> out;
  for (auto& e : detail::zero_sum_elements(*a, b, false)) out.emplace_back(a, std::move(e));
  return out;
}

std::set<std::size_t> sumset(const std::set<std::size_t>& x, const std::set<std::size_t>& y) {
  std::set<std::size_t> out;
  for (auto a : x)
    for (auto b : y) out.insert(a + b);
  return out;
}

}  // namespace

// Frozen from independent enumeration; |A(G)| includes the prime 0.
TEST(Atoms, CountsAndDavenportForSmallGroups) {
  const std::vector<std::tuple<std::vector<std::int64_t>, std::size_t, std::size_t>> table{
      {{2}, 2, 2},      {{3}, 4, 3},      {{4}, 7, 4},       {{5}, 15, 5},    {{6}, 20, 6},
      {{7}, 48, 7},     {{2, 2}, 5, 3},   {{2, 2, 2}, 22, 4}, {{2, 2, 2, 2}, 324, 5}, {{3, 3}, 69, 5}};
  for (const auto& [torsion, count, d] : table) {
    const auto s = enumerate_atoms(block_alphabet(normalize_spec(torsion)));
    EXPECT_EQ(s.atoms.size(), count) << normalize_spec(torsion).to_string();
    EXPECT_EQ(s.davenport, d) << normalize_spec(torsion).to_string();
  }
}

TEST(Atoms, EnumerationMatchesFilteringTheUniversalElement) {
  for (auto torsion : {std::vector<std::int64_t>{3}, {4}, {5}, {2, 2}, {2, 4}}) {
    const auto spec = normalize_spec(torsion);
    const auto a = block_alphabet(spec);
    Exponents universal(a->size());
    for (std::size_t i = 0; i < a->size(); ++i) universal[i] = static_cast<std::uint32_t>(*order(a->class_of(i)));
    std::set<Exponents> filtered;
    for (const auto& s : subsequences(Sequence(a, universal)))
      if (!s.empty() && is_atom(s)) filtered.insert(s.exponents());
    std::set<Exponents> enumerated;
    for (const auto& s : enumerate_atoms(a).atoms) enumerated.insert(s.exponents());
    EXPECT_EQ(filtered, enumerated) << spec.to_string();
  }
}

TEST(Atoms, CanonicalOrderAndNoDuplicates) {
  const auto s = enumerate_atoms(block_alphabet(normalize_spec({2, 2, 2})));
  for (std::size_t i = 1; i < s.atoms.size(); ++i) EXPECT_GT(s.atoms[i - 1].exponents(), s.atoms[i].exponents());
  for (const auto& u : s.atoms) EXPECT_TRUE(is_atom(u));
}

TEST(Atoms, InfiniteAlphabetsAreNotEnumerable) {
  const auto z = parse_group_spec("Z");
  const auto a = block_alphabet({parse_element(z, "g"), parse_element(z, "-g")});
  try {
    (void)enumerate_atoms(a);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_enumerable);
  }
}

TEST(Atoms, KnownAtoms) {
  const auto c23 = block_alphabet(normalize_spec({2, 2, 2}));
  EXPECT_TRUE(is_atom(parse_sequence("e0 e1 e2 e3", c23)));
  EXPECT_FALSE(is_atom(parse_sequence("e1^2 e2^2", c23)));
  EXPECT_FALSE(is_atom(parse_sequence("e1 e2", c23)));
  EXPECT_FALSE(is_atom(Sequence(c23)));
  const auto c3 = block_alphabet(normalize_spec({3}));
  EXPECT_TRUE(is_atom(parse_sequence("0", c3)));
  EXPECT_EQ(atoms_dividing(parse_sequence("g^3 -g^3", c3)).size(), 3u);
}

TEST(Factorizations, SymmetricPairOverC3) {
  const auto c3 = block_alphabet(normalize_spec({3}));
  const auto b = parse_sequence("g^3 -g^3", c3);
  const auto z = factorizations(b);
  EXPECT_EQ(z.size(), 2u);
  EXPECT_EQ(z.lengths(), (std::set<std::size_t>{2, 3}));
  EXPECT_EQ(catenary(b), 3u);
  EXPECT_EQ(minimal_relations(b), (std::set<std::size_t>{3}));
  EXPECT_EQ(distance(z[0], z[1]), 3u);
  for (std::size_t i = 0; i < z.size(); ++i) EXPECT_EQ(z[i].product(), b);
}

TEST(Factorizations, EmptyElementHasTheEmptyFactorization) {
  const auto c3 = block_alphabet(normalize_spec({3}));
  const auto z = factorizations(Sequence(c3));
  EXPECT_EQ(z.size(), 1u);
  EXPECT_EQ(z.lengths(), (std::set<std::size_t>{0}));
  EXPECT_EQ(catenary(Sequence(c3)), 0u);
}

TEST(Factorizations, NonZeroSumAndLimits) {
  const auto c3 = block_alphabet(normalize_spec({3}));
  try {
    (void)factorizations(parse_sequence("g^2", c3));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_zero_sum);
  }
  const auto c24 = block_alphabet(normalize_spec({2, 2, 2, 2}));
  const auto big = parse_sequence("e0^4 e1^4 e2^4 e3^4 e4^4", c24);
  try {
    (void)factorizations(big, Limits{2});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::size_limit);
  }
}

TEST(Factorizations, DistanceIsAMetric) {
  const auto a = block_alphabet(normalize_spec({2, 2, 2}));
  for (const auto& b : small_elements(a, 8)) {
    const auto z = factorizations(b);
    for (std::size_t i = 0; i < z.size(); ++i)
      for (std::size_t j = 0; j < z.size(); ++j) {
        const auto dij = distance(z[i], z[j]);
        EXPECT_EQ(dij, distance(z[j], z[i]));
        EXPECT_EQ(dij == 0, i == j);
        EXPECT_NE(dij, 1u);  // two distinct factorizations differ in at least two atoms
        for (std::size_t k = 0; k < z.size(); ++k) EXPECT_LE(dij, distance(z[i], z[k]) + distance(z[k], z[j]));
      }
  }
}

TEST(Factorizations, CatenaryBoundsAndRelations) {
  for (auto torsion : {std::vector<std::int64_t>{4}, {5}, {2, 2, 2}}) {
    const auto a = block_alphabet(normalize_spec(torsion));
    for (const auto& b : small_elements(a, 9)) {
      const auto z = factorizations(b);
      const auto info = catenary_info(z);
      const auto l = z.lengths();
      if (l.size() >= 2) {
        const auto d = delta_of(l);
        EXPECT_LE(2 + *d.rbegin(), info.catenary) << to_string(b);
      }
      if (info.catenary >= 2) {
        EXPECT_EQ(*info.minimal_relations.rbegin(), info.catenary) << to_string(b);
      } else {
        EXPECT_TRUE(info.minimal_relations.empty());
      }
      EXPECT_EQ(info.factorization_count, z.size());
    }
  }
}

TEST(Factorizations, LengthSetsAreSuperadditive) {
  const auto a = block_alphabet(normalize_spec({4}));
  const auto elems = small_elements(a, 6);
  for (std::size_t i = 0; i < elems.size(); i += 3)
    for (std::size_t j = i; j < elems.size(); j += 5) {
      const auto l1 = length_set(elems[i]), l2 = length_set(elems[j]);
      const auto l12 = length_set(mul(elems[i], elems[j]));
      const auto s = sumset(l1, l2);
      EXPECT_TRUE(std::includes(l12.begin(), l12.end(), s.begin(), s.end()));
    }
}

TEST(LengthEngine, AgreesWithEnumeration) {
  const auto a = block_alphabet(normalize_spec({2, 2, 2}));
  auto engine = LengthEngine::for_alphabet(a);
  for (const auto& b : small_elements(a, 10)) {
    const auto l = factorizations(b).lengths();
    EXPECT_EQ(engine.lengths(b.exponents()), l) << to_string(b);
    const auto ext = engine.extremes(b.exponents());
    ASSERT_TRUE(ext.has_value());
    EXPECT_EQ(ext->first, *l.begin());
    EXPECT_EQ(ext->second, *l.rbegin());
  }
}

TEST(Factorizations, InfiniteCyclicElements) {
  const auto z = parse_group_spec("Z");
  const auto terms = parse_terms("g^3 (-g)^3 (3g) (-3g)", z);
  std::vector<GroupElement> classes;
  for (const auto& [g, k] : terms) classes.push_back(g);
  const auto a = block_alphabet(classes);
  const auto b = parse_sequence("g^3 (-g)^3 (3g) (-3g)", a);
  EXPECT_EQ(catenary(b), 4u);
}
