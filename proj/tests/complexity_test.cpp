#include <random>
#include <string>

#include <gtest/gtest.h>

#include "abelian/complexity.hpp"
#include "abelian/generator.hpp"
#include "abelian/periodicity.hpp"
#include "oracles.hpp"

using namespace abelian;

TEST(ComplexityProfile, SmallCases) {
  auto p = complexity_profile(Word::parse("1111"), 2);
  EXPECT_EQ(p.f(2), 1u);
  EXPECT_EQ(p.f_abelian(2), 1u);
  EXPECT_EQ(p.f(0), 1u);
  EXPECT_EQ(p.f_abelian(0), 1u);
  EXPECT_THROW(complexity_profile(Word::parse("12"), 3), Error);
  EXPECT_THROW(static_cast<void>(p.f(3)), Error);
}

TEST(ComplexityProfile, PeriodicCollapse) {
  auto w = generate_prefix(cyclic_pattern(4), 1000);
  EXPECT_EQ(complexity_profile(w, 4).f_abelian(4), 1u);

  // Period p, prefix length >= m + p: at most p factors and classes.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t const p       = 1 + trial % 7;
    auto const        pattern = Word::parse(oracle::random_word(rng, 3, p),
                                            Alphabet(3));
    auto const        word    = generate_prefix(Periodic{pattern}, 60);
    for (std::size_t m = 1; m + p <= 60; ++m) {
      EXPECT_LE(subword_complexity(word, m), p);
      EXPECT_LE(abelian_complexity(word, m), p);
    }
  }
}

TEST(ComplexityProfile, MatchesOracleAndBounds) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t const n = 1 + trial % 5;
    std::size_t const L = 1 + (trial * 37) % 90;
    auto const        s = oracle::random_word(rng, n, L);
    auto const        w = Word::parse(s, Alphabet(n));
    auto const        p = complexity_profile(w, L);
    EXPECT_EQ(p.f(1), w.distinct_letters());
    EXPECT_EQ(p.f_abelian(1), w.distinct_letters());
    for (std::size_t m = 1; m <= L; ++m) {
      EXPECT_EQ(p.f(m), oracle::distinct_factors(s, m));
      EXPECT_EQ(p.f_abelian(m), oracle::distinct_anagram_classes(s, m));
      EXPECT_EQ(p.f_abelian(m), oracle_abelian_count(w, m));
      EXPECT_LE(1u, p.f_abelian(m));
      EXPECT_LE(p.f_abelian(m), p.f(m));
      EXPECT_LE(p.f(m), L - m + 1);
    }
  }
}

TEST(ComplexityProfile, MonotoneAsPrefixExtends) {
  auto const full = generate_prefix(StandardSequence{{1, 2}}, 300);
  std::mt19937_64 rng(9);
  auto const      rnd = Word::parse(oracle::random_word(rng, 3, 300), Alphabet(3));
  for (auto const& w : {full, rnd}) {
    for (std::size_t m : {1, 2, 5, 13}) {
      std::size_t last_f = 0, last_ab = 0;
      for (std::size_t L = m; L <= w.size(); L += 17) {
        auto const pre = w.prefix(L);
        auto const f   = subword_complexity(pre, m);
        auto const ab  = abelian_complexity(pre, m);
        EXPECT_GE(f, last_f);
        EXPECT_GE(ab, last_ab);
        last_f  = f;
        last_ab = ab;
      }
    }
  }
}

TEST(ComplexityProfile, LetterPermutationInvariance) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    auto const w = Word::parse(oracle::random_word(rng, 4, 40), Alphabet(4));
    std::vector<Letter> perm{2, 0, 3, 1};
    EXPECT_EQ(complexity_profile(w, 40), complexity_profile(relabel(w, perm), 40));
  }
}

TEST(ComplexityProfile, CsvSchema) {
  auto const fib = generate_prefix(fibonacci_morphism(), 200);
  EXPECT_EQ(to_csv(complexity_profile(fib, 5)),
            "m,f,f_abelian\n1,2,2\n2,3,2\n3,4,2\n4,5,2\n5,6,2\n");
}

TEST(Oracle, Examples) {
  EXPECT_EQ(oracle_abelian_count(Word::parse("31213"), 2), 2u);
  EXPECT_EQ(oracle_abelian_count(Word::parse("1232"), 4), 1u);
  EXPECT_EQ(oracle_abelian_count(Word::parse("31213"), 5), 1u);
  EXPECT_THROW(oracle_abelian_count(Word::parse("12"), 0), Error);
  EXPECT_THROW(oracle_abelian_count(Word::parse("12"), 3), Error);
}

TEST(Period, Examples) {
  EXPECT_EQ(period_report(Word::parse("123123")).period, 3u);
  EXPECT_FALSE(period_report(Word::parse("123123")).aperiodic_at_scale);
  EXPECT_EQ(period_report(Word::parse("1111")).period, 1u);

  auto const fib = period_report(Word::parse("1211212112112"));
  EXPECT_EQ(fib.period, oracle::least_period("1211212112112"));
  EXPECT_GT(fib.period, 6u);
  EXPECT_TRUE(fib.aperiodic_at_scale);
  // Tail "12112112" has period 3, starting at 5.
  ASSERT_TRUE(fib.ultimate.has_value());
  EXPECT_EQ(*fib.ultimate, (UltimatePeriod{5, 3}));

  auto const stair = period_report(Word::parse("1234444444"));
  EXPECT_EQ(stair.ultimate, (UltimatePeriod{3, 1}));
  EXPECT_THROW(period_report(Word(Alphabet(2))), Error);
}

TEST(Period, AgreesWithBruteForce) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    auto const s = oracle::random_word(rng, 1 + trial % 3, 1 + trial % 40);
    auto const r = period_report(Word::parse(s));
    EXPECT_EQ(r.period, oracle::least_period(s)) << s;
    EXPECT_EQ(r.aperiodic_at_scale, 2 * r.period > s.size());
    if (r.ultimate) {
      auto const [c, p] = *r.ultimate;
      EXPECT_LE(c + p, s.size());
      for (std::size_t i = c; i + p < s.size(); ++i) {
        EXPECT_EQ(s[i], s[i + p]);
      }
    }
  }
}

TEST(Period, MorseHedlundAtScale) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    auto const pattern = oracle::random_word(rng, 3, 1 + trial % 6);
    std::string s;
    while (s.size() < 50 + static_cast<std::size_t>(trial % 13)) {
      s += pattern;
    }
    auto const w = Word::parse(s);
    auto const r = period_report(w);
    ASSERT_LE(2 * r.period, w.size());
    std::size_t const base = subword_complexity(w, r.period);
    for (std::size_t m = r.period; m + r.period <= w.size(); ++m) {
      EXPECT_EQ(subword_complexity(w, m), base) << s << " m=" << m;
    }
  }
}

TEST(Gaps, Examples) {
  auto const periodic = gap_report(generate_prefix(cyclic_pattern(3), 30), 2);
  ASSERT_EQ(periodic.lengths.size(), 2u);
  for (auto const& g : periodic.lengths) {
    EXPECT_EQ(g.max_gap, 3u);
  }

  auto const stair = gap_report(Word::parse("1234444"), 1);
  EXPECT_EQ(stair.lengths[0].max_gap, LengthGaps::kInfinite);

  auto const fib = gap_report(generate_prefix(fibonacci_morphism(), 1000), 3);
  for (auto const& g : fib.lengths) {
    EXPECT_NE(g.max_gap, LengthGaps::kInfinite);
    EXPECT_GE(g.max_gap, 1u);
  }
  EXPECT_THROW(gap_report(Word::parse("12"), 3), Error);
  EXPECT_THROW(gap_report(Word::parse("12"), 0), Error);
}

TEST(Gaps, MonotoneInFactorLength) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    auto const w = Word::parse(oracle::random_word(rng, 2 + trial % 2, 60));
    auto const g = gap_report(w, 5);
    for (std::size_t l = 1; l < 5; ++l) {
      EXPECT_LE(g.lengths[l - 1].max_gap, g.lengths[l].max_gap);
    }
  }
}
