#include <gtest/gtest.h>

#include "zsum/parse.hpp"
#include "zsum/sequence.hpp"

using namespace zsum;

TEST(Alphabet, BlockAlphabetOfWholeGroup) {
  const auto a = block_alphabet(normalize_spec({3}));
  ASSERT_EQ(a->size(), 3u);
  EXPECT_TRUE(a->is_block());
  EXPECT_TRUE(a->has_torsion_classes());
  EXPECT_EQ((*a)[1].label, "g");
  EXPECT_EQ((*a)[2].label, "-g");
  EXPECT_EQ(a->find("-g"), std::optional<std::size_t>(2));
}

TEST(Alphabet, KrullLettersAreNumberedPerClass) {
  const auto spec = normalize_spec({2});
  const auto e = parse_element(spec, "g");
  const auto a = krull_alphabet(spec, {{zero(spec), 1}, {e, 2}});
  EXPECT_FALSE(a->is_block());
  EXPECT_EQ(a->letters_of_class(e).size(), 2u);
  EXPECT_EQ((*a)[1].label, "g#1");
}

TEST(Alphabet, HashDependsOnContentOnly) {
  const auto spec = normalize_spec({2, 2});
  EXPECT_EQ(block_alphabet(spec)->hash(), block_alphabet(spec)->hash());
  EXPECT_NE(block_alphabet(spec)->hash(), block_alphabet(normalize_spec({4}))->hash());
  EXPECT_NE(block_alphabet(spec)->hash(), krull_alphabet(spec, 2)->hash());
  EXPECT_EQ(block_alphabet(spec)->hash().size(), 16u);
}

TEST(Sequence, ParseExamples) {
  const auto c3 = block_alphabet(normalize_spec({3}));
  const auto s = parse_sequence("g^3 (-g)^3", c3);
  EXPECT_EQ(s.exponents(), (Exponents{0, 3, 3}));
  EXPECT_TRUE(parse_sequence("", c3).empty());

  const auto c23 = normalize_spec({2, 2, 2});
  const auto b = block_alphabet(c23);
  const auto u = parse_sequence("e0 e1 e2 e3", b);
  EXPECT_EQ(u.length(), 4u);
  EXPECT_TRUE(is_zero_sum(u));
}

TEST(Sequence, RenderingRoundTrips) {
  const auto c5 = block_alphabet(normalize_spec({5}));
  for (const char* text : {"g^5", "0·2g·-2g", "g^2·2g^4·-g", "1"}) {
    const auto s = parse_sequence(text, c5);
    EXPECT_EQ(to_string(s), text);
    EXPECT_EQ(parse_sequence(to_string(s), c5), s);
  }
}

TEST(Sequence, ParseErrors) {
  const auto c3 = block_alphabet(normalize_spec({3}));
  for (const char* bad : {"h", "g^-1", "g^", "(g", "g^x"}) {
    try {
      (void)parse_sequence(bad, c3);
      FAIL() << bad;
    } catch (const error& e) {
      EXPECT_EQ(e.code(), errc::parse_error) << bad;
    }
  }
}

TEST(Sequence, MonoidOperations) {
  const auto c4 = block_alphabet(normalize_spec({4}));
  const auto s = parse_sequence("g^2 2g", c4);
  const auto t = parse_sequence("g 2g^3 -g", c4);
  const auto st = mul(s, t);
  EXPECT_EQ(st.length(), s.length() + t.length());
  EXPECT_TRUE(divides(s, st));
  EXPECT_EQ(quotient(st, s), t);
  EXPECT_EQ(sigma(st), sigma(s) + sigma(t));
  EXPECT_EQ(pow(s, 3).length(), 9u);
  EXPECT_EQ(sigma(neg_seq(s)), neg(sigma(s)));
  EXPECT_FALSE(divides(t, s));
  EXPECT_THROW(quotient(s, t), error);
  EXPECT_EQ(support(s).size(), 2u);
}

TEST(Sequence, SubsequencesEnumerateAllDivisors) {
  const auto c3 = block_alphabet(normalize_spec({3}));
  const auto s = parse_sequence("g^2 -g^3", c3);
  std::size_t n = 0;
  for (const auto& d : subsequences(s)) {
    EXPECT_TRUE(divides(d, s));
    ++n;
  }
  EXPECT_EQ(n, 3u * 4u);
  EXPECT_EQ(subsequences(s).size(), 12u);
}

TEST(Sequence, DifferentAlphabetsDoNotMix) {
  const auto a = block_alphabet(normalize_spec({3}));
  const auto b = block_alphabet(normalize_spec({4}));
  EXPECT_THROW(mul(Sequence(a), Sequence(b)), error);
}

TEST(Sequence, TermsOverZ) {
  const auto z = parse_group_spec("Z");
  const auto terms = parse_terms("g^2 (-g)^2 (2g) (-2g)", z);
  ASSERT_EQ(terms.size(), 4u);
  EXPECT_EQ(terms[0].second, 2u);
}
