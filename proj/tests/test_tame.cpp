#include <gtest/gtest.h>

#include "zsum/oracle.hpp"
#include "zsum/parse.hpp"
#include "zsum/tame.hpp"
#include "zsum/witnesses.hpp"

using namespace zsum;

namespace {

ScanBound bounded(std::size_t n) {
  ScanBound b;
  b.max_element_length = n;
  return b;
}

}  // namespace

TEST(Tame, SymmetricPairOverC3) {
  const auto a = block_alphabet(normalize_spec({3}));
  const auto u = parse_sequence("g^3", a);
  EXPECT_EQ(tame(parse_sequence("g^3 -g^3", a), u), 3u);
  EXPECT_EQ(tame(parse_sequence("g^3 -g^3", a), parse_sequence("g -g", a)), 3u);
  EXPECT_EQ(tame(parse_sequence("g^3", a), u), 0u);
}

TEST(Tame, DegenerateCases) {
  const auto a = block_alphabet(normalize_spec({3}));
  const auto prime = parse_sequence("0", a);
  EXPECT_EQ(tame(parse_sequence("0^2 g^3 -g^3", a), prime), 0u);
  EXPECT_EQ(tame(parse_sequence("g -g", a), parse_sequence("g^3", a)), 0u);  // u does not divide A
  try {
    (void)tame(parse_sequence("g^3 -g^3", a), parse_sequence("g^3 -g^3", a));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::invalid_atom);
  }
  try {
    (void)tame(parse_sequence("g^2", a), parse_sequence("0", a));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_zero_sum);
  }
}

TEST(Tame, PrimesNeverContributeToTa) {
  const auto a = block_alphabet(normalize_spec({2, 2}));
  const auto prime = parse_sequence("0", a);
  ScanBound b = bounded(8);
  for (auto& e : detail::zero_sum_elements(*a, b, false)) {
    const Sequence s(a, e);
    if (divides(prime, s)) {
      EXPECT_EQ(tame(s, prime), 0u) << to_string(s);
    }
  }
}

TEST(Tame, BoundedByMaxLength) {
  const auto a = block_alphabet(normalize_spec({5}));
  ScanBound b = bounded(8);
  for (auto& e : detail::zero_sum_elements(*a, b, true)) {
    const Sequence s(a, e);
    const auto z = factorizations(s);
    const auto lmax = *z.lengths().rbegin();
    for (std::size_t k = 0; k < z.atoms().size(); ++k) {
      EXPECT_LE(tame_over(z, k), lmax);
      EXPECT_NE(tame_over(z, k), 1u);
    }
  }
}

TEST(Ta, TwoLetterClosedFormMatchesGenericEngine) {
  for (std::size_t d = 2; d <= 5; ++d) {
    const auto a = two_letter_monoid(d);
    for (std::size_t s = 0; s <= 3 * d; ++s)
      for (std::size_t t = s % d; t <= 3 * d; t += d) {
        const Sequence b(a, {static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(t)});
        const auto closed = two_letter_factorizations(s, t, d);
        const auto generic = factorizations(b);
        EXPECT_EQ(closed.multiplicities(), generic.multiplicities()) << d << " " << s << " " << t;
        for (std::size_t k = 0; k < generic.atoms().size(); ++k)
          EXPECT_EQ(tame_over(closed, k), tame_over(generic, k));
      }
    EXPECT_THROW(two_letter_factorizations(1, 2, d), error);
  }
}

// B({e1,-e1,e2,-e2}) with e1, e2 independent is the product of the two
// two-letter monoids, so its Ta is the union of theirs.
TEST(Ta, ProductMonoidIsTheUnion) {
  const auto spec = normalize_spec({3, 4});
  const auto e1 = scale(4, standard_basis(spec)[0]);
  const auto e2 = scale(3, standard_basis(spec)[0]);
  ASSERT_EQ(*order(e1), 3u);
  ASSERT_EQ(*order(e2), 4u);
  const auto a = block_alphabet({e1, neg(e1), e2, neg(e2)});
  EXPECT_EQ(ta_scan(a, bounded(16)).values(), (std::set<std::size_t>{3, 4}));
  EXPECT_EQ(ta_scan(two_letter_monoid(3), bounded(16)).values(), (std::set<std::size_t>{3}));
  EXPECT_EQ(ta_scan(two_letter_monoid(4), bounded(16)).values(), (std::set<std::size_t>{4}));
}

TEST(Ta, BlockMonoidInsideKrullMonoid) {
  for (auto torsion : {std::vector<std::int64_t>{3}, {2, 2}}) {
    const auto spec = normalize_spec(torsion);
    const auto block = ta_scan(block_alphabet(spec), bounded(8)).values();
    const auto krull = ta_scan(krull_alphabet(spec, 2), bounded(8)).values();
    EXPECT_TRUE(std::includes(krull.begin(), krull.end(), block.begin(), block.end())) << spec.to_string();
    EXPECT_TRUE(krull.count(2)) << spec.to_string();
  }
}

TEST(Ta, PinnedSmallCases) {
  auto values = [](std::initializer_list<std::int64_t> t, std::size_t bound) {
    return ta_scan(block_alphabet(normalize_spec(t)), bounded(bound));
  };
  const auto c3 = values({3}, 12);
  EXPECT_EQ(c3.values(), (std::set<std::size_t>{3}));
  EXPECT_TRUE(c3.complete);
  EXPECT_TRUE(c3.checks_passed());
  const auto c22 = values({2, 2}, 12);
  EXPECT_EQ(c22.values(), (std::set<std::size_t>{3}));
  EXPECT_TRUE(c22.complete);
  // krull C2 with the nonzero class doubled
  const auto spec = normalize_spec({2});
  const auto k = ta_scan(krull_alphabet(spec, {{zero(spec), 1}, {standard_basis(spec)[0], 2}}), bounded(10));
  EXPECT_EQ(k.values(), (std::set<std::size_t>{2}));
  EXPECT_TRUE(k.complete);
}

TEST(Ta, WitnessesCarryTheirValue) {
  const auto a = block_alphabet(normalize_spec({2, 2, 2}));
  const auto rep = ta_scan(a, bounded(10));
  for (const auto& [t, w] : rep.witnesses) {
    ASSERT_TRUE(w.atom.has_value());
    EXPECT_EQ(tame(w.element, *w.atom), t);
  }
}

TEST(TameLocal, IncludesZeroAndTheSymmetricPair) {
  const auto a = block_alphabet(normalize_spec({3}));
  const auto u = parse_sequence("g^3", a);
  const auto rep = tame_local_scan(a, u, bounded(9));
  EXPECT_TRUE(rep.values().count(0));
  EXPECT_TRUE(rep.values().count(3));
  EXPECT_EQ(*rep.values().rbegin(), 3u);
  EXPECT_TRUE(rep.checks_passed());
}

TEST(Ta, AnnotationsForOpenCases) {
  const auto c25 = block_alphabet(normalize_spec({2, 2, 2, 2, 2}));
  const auto rep = ta_scan(c25, bounded(4));
  ASSERT_FALSE(rep.annotations.empty());
  EXPECT_NE(rep.annotations.front().find("12"), std::string::npos);
  EXPECT_FALSE(rep.complete);
}
