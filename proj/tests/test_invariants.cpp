#include <gtest/gtest.h>

#include <random>

#include "zsum/invariants.hpp"
#include "zsum/oracle.hpp"
#include "zsum/parse.hpp"

using namespace zsum;

namespace {

ScanBound bounded(std::size_t n) {
  ScanBound b;
  b.max_element_length = n;
  return b;
}

bool subset(const auto& x, const auto& y) { return std::includes(y.begin(), y.end(), x.begin(), x.end()); }

}  // namespace

TEST(LengthSetInvariants, DeltaAndElasticity) {
  EXPECT_EQ(delta_of({2, 3, 5, 9}), (std::set<std::size_t>{1, 2, 4}));
  EXPECT_TRUE(delta_of({4}).empty());
  EXPECT_EQ(elasticity_of({2, 3, 5}), Rational(5, 2));
  EXPECT_EQ(elasticity_of({0}), Rational(1));
  EXPECT_THROW(elasticity_of({}), error);
  EXPECT_EQ(to_string(Rational(10, 4)), "5/2");
  EXPECT_EQ(to_string(Rational(3)), "3");
}

TEST(Davenport, EnumeratedAgainstFormula) {
  for (auto torsion : {std::vector<std::int64_t>{2, 4}, {3, 6}, {2, 2, 4}, {4, 4}}) {
    const auto spec = normalize_spec(torsion);
    EXPECT_EQ(static_cast<std::int64_t>(davenport(spec)), davenport_star(spec)) << spec.to_string();
    EXPECT_EQ(known_davenport(spec), std::optional<std::int64_t>(davenport_star(spec)));
  }
  EXPECT_FALSE(known_davenport(normalize_spec({2, 2, 6})).has_value());
  EXPECT_THROW(davenport_star(parse_group_spec("Z")), error);
  EXPECT_EQ(rho_group(normalize_spec({5})), Rational(5, 2));
  EXPECT_EQ(rho_group(normalize_spec({2, 2, 2})), Rational(2));
}

TEST(PinnedSets, Table) {
  auto pin = [](const char* inv, const AlphabetPtr& a) { return pinned_set(inv, *a); };
  const auto c2 = block_alphabet(normalize_spec({2}));
  const auto c5 = block_alphabet(normalize_spec({5}));
  EXPECT_EQ(pin("delta", c2), std::optional<std::set<std::size_t>>(std::set<std::size_t>{}));
  EXPECT_EQ(pin("delta", c5), std::optional<std::set<std::size_t>>({1, 2, 3}));
  EXPECT_EQ(pin("daleth", c5), std::optional<std::set<std::size_t>>({3, 4, 5}));
  EXPECT_EQ(pin("ca", c5), std::optional<std::set<std::size_t>>({2, 3, 4, 5}));
  EXPECT_EQ(pin("ta", block_alphabet(normalize_spec({2, 2, 2, 2}))),
            std::optional<std::set<std::size_t>>({2, 3, 4, 5, 6, 7, 8, 9}));
  EXPECT_FALSE(pin("ta", block_alphabet(normalize_spec({2, 2, 2, 2, 2}))).has_value());
  EXPECT_FALSE(pin("ca", block_alphabet(normalize_spec({3, 3}))).has_value());
  // a proper subset of the group is not pinned
  const auto spec = normalize_spec({5});
  EXPECT_FALSE(pin("ca", block_alphabet({parse_element(spec, "g"), parse_element(spec, "-g")})).has_value());
}

TEST(Scans, ValuesGrowWithTheBound) {
  const auto a = block_alphabet(normalize_spec({4}));
  std::set<std::size_t> delta, ca;
  std::set<Rational> rho;
  for (std::size_t n = 2; n <= 12; ++n) {
    const auto d = delta_scan(a, bounded(n)).values();
    const auto c = ca_scan(a, bounded(n)).values();
    const auto r = elasticity_scan(a, bounded(n)).values();
    EXPECT_TRUE(subset(delta, d)) << n;
    EXPECT_TRUE(subset(ca, c)) << n;
    EXPECT_TRUE(subset(rho, r)) << n;
    delta = d;
    ca = c;
    rho = r;
  }
  EXPECT_EQ(delta, (std::set<std::size_t>{1, 2}));
  EXPECT_EQ(ca, (std::set<std::size_t>{2, 3, 4}));
  EXPECT_EQ(*rho.rbegin(), Rational(2));
}

TEST(Scans, CompletenessOnlyFromPins) {
  const auto c3 = block_alphabet(normalize_spec({3}));
  EXPECT_FALSE(delta_scan(c3, bounded(2)).complete);
  EXPECT_TRUE(delta_scan(c3, bounded(9)).complete);
  const auto z = parse_group_spec("Z");
  const auto za = block_alphabet({parse_element(z, "g"), parse_element(z, "-g"), parse_element(z, "2g"),
                                  parse_element(z, "-2g")});
  // four atoms with the single relation g^2(-2g) * 2g(-g)^2 = (g(-g))^2 * 2g(-2g)
  const auto rep = ca_scan(za, bounded(8));
  EXPECT_FALSE(rep.complete);
  EXPECT_EQ(rep.values(), (std::set<std::size_t>{3}));
}

TEST(Scans, WitnessesReproduceTheirValues) {
  const auto a = block_alphabet(normalize_spec({2, 2, 2}));
  const auto rep = ca_scan(a, bounded(10));
  for (const auto& [c, w] : rep.witnesses) EXPECT_EQ(catenary(w.element), c);
  const auto el = elasticity_scan(a, bounded(10));
  for (const auto& [q, w] : el.witnesses) EXPECT_EQ(elasticity_of(length_set(w.element)), q);
  const auto ds = daleth_star_report(a);
  for (const auto& [v, w] : ds.witnesses) {
    ASSERT_TRUE(w.atom.has_value());
    EXPECT_TRUE(is_atom(*w.atom));
    auto l = length_set(w.element);
    l.erase(2);
    EXPECT_EQ(*l.begin(), v);
  }
}

TEST(Scans, JobsDoNotChangeReports) {
  const auto a = block_alphabet(normalize_spec({2, 4}));
  const auto one = catenary_scan(a, bounded(9), 1);
  const auto three = catenary_scan(a, bounded(9), 3);
  EXPECT_EQ(one.ca.values(), three.ca.values());
  EXPECT_EQ(one.r.values(), three.r.values());
  for (const auto& [c, w] : one.ca.witnesses) EXPECT_EQ(three.ca.witnesses.at(c).element, w.element);
}

TEST(DalethStar, SmallGroups) {
  EXPECT_EQ(daleth_star(block_alphabet(normalize_spec({4}))), (std::set<std::size_t>{3, 4}));
  EXPECT_EQ(daleth_star(block_alphabet(normalize_spec({2, 2, 2}))), (std::set<std::size_t>{3, 4}));
  EXPECT_EQ(daleth_star(block_alphabet(normalize_spec({6}))), (std::set<std::size_t>{3, 4, 5, 6}));
}

// Regression values; the search order is part of the contract.
TEST(ElasticityWitness, FrozenC5Witnesses) {
  const auto a = block_alphabet(normalize_spec({5}));
  EXPECT_EQ(to_string(*find_elasticity_witness(a, Rational(5, 2), 40)), "g^5·-g^5");
  EXPECT_EQ(to_string(*find_elasticity_witness(a, Rational(2), 40)), "0·g^5·-g^5");
  EXPECT_EQ(to_string(*find_elasticity_witness(a, Rational(7, 3), 40)), "g^13·2g·-2g·-g^13");
  EXPECT_EQ(to_string(*find_elasticity_witness(a, Rational(1), 40)), "0");
  EXPECT_FALSE(find_elasticity_witness(a, Rational(7, 3), 10).has_value());
  try {
    (void)find_elasticity_witness(a, Rational(3), 40);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::invalid_target);
  }
}

TEST(ElasticityWitness, WithoutPrimeLetters) {
  const auto spec = normalize_spec({5});
  std::vector<GroupElement> nonzero;
  for (const auto& g : elements(spec))
    if (!g.is_zero()) nonzero.push_back(g);
  const auto a = block_alphabet(nonzero);
  for (auto q : {Rational(3, 2), Rational(9, 4), Rational(5, 4)}) {
    const auto w = find_elasticity_witness(a, q, 40);
    ASSERT_TRUE(w.has_value()) << to_string(q);
    EXPECT_EQ(elasticity_of(length_set(*w)), q);
  }
}

TEST(WeightedSum, FrozenExample) {
  const std::vector<std::int64_t> a{2, 3}, x{3, 2};
  const auto rows = decompose_weighted_sum(a, x, 2);
  EXPECT_EQ(rows, (std::vector<std::vector<std::int64_t>>{{3, 0}, {0, 2}}));
}

TEST(WeightedSum, RandomInstancesUpToFourWeights) {
  std::mt19937_64 rng(42);
  auto uniform = [&](std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); };
  int done = 0;
  while (done < 100) {
    const auto n = static_cast<std::size_t>(uniform(1, 4));
    std::vector<std::int64_t> a;
    std::int64_t prod = 1;
    while (a.size() < n) {
      const auto v = uniform(1, 9);
      if (std::find(a.begin(), a.end(), v) == a.end()) {
        a.push_back(v);
        prod *= v;
      }
    }
    const auto t = uniform(1, 5);
    std::vector<std::int64_t> x(n);
    std::int64_t left = t * prod;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      x[i] = uniform(0, left / a[i]);
      left -= a[i] * x[i];
    }
    if (left % a[n - 1]) continue;
    x[n - 1] = left / a[n - 1];
    ++done;
    const auto rows = decompose_weighted_sum(a, x, t);
    EXPECT_TRUE(oracle::valid_weighted_decomposition(a, x, t, rows));
  }
}

TEST(WeightedSum, RejectsInvalidInstances) {
  auto code = [](std::vector<std::int64_t> a, std::vector<std::int64_t> x, std::int64_t t) {
    try {
      (void)decompose_weighted_sum(a, x, t);
    } catch (const error& e) {
      return e.code();
    }
    return errc::parse_error;
  };
  EXPECT_EQ(code({2, 2}, {1, 1}, 1), errc::invalid_instance);
  EXPECT_EQ(code({2, 3}, {1, 1}, 1), errc::invalid_instance);
  EXPECT_EQ(code({2, 3}, {3, 0}, 0), errc::invalid_instance);
  EXPECT_EQ(code({2, 3}, {-3, 4}, 1), errc::invalid_instance);
}
