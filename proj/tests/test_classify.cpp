#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracle.hpp"
#include "slab/classify.hpp"
#include "slab/error.hpp"

namespace slab {
namespace {

using test::closure;
using test::e;
using test::ideal;
using test::indices;

TEST(SDomain, Goldens) {
  const FiniteRing z6 = make_zn(6);
  const Witness w = is_s_integral_domain(z6, closure(z6, {2}));
  EXPECT_TRUE(w.verdict);
  EXPECT_EQ(w.kind, WitnessKind::uniform_s);
  EXPECT_EQ(w.s, e(2));

  const FiniteRing z30 = make_zn(30);
  const Witness n = is_s_integral_domain(z30, closure(z30, {2}));
  EXPECT_FALSE(n.verdict);
  EXPECT_EQ(n.kind, WitnessKind::pair_counterexample);
  EXPECT_EQ(indices(n.elements), (std::vector<std::size_t>{5, 6}));

  const FiniteRing z5 = make_zn(5);
  const Witness f = is_s_integral_domain(z5, closure(z5, {1}));
  EXPECT_TRUE(f.verdict);
  EXPECT_EQ(f.s, e(1));
}

TEST(SDomain, MatchesOracleOnEveryZnAndSet) {
  for (std::size_t n = 2; n <= 24; ++n) {
    const FiniteRing r = make_zn(n);
    for (const MultSet& s : enumerate_mult_sets(r)) {
      const Witness w = is_s_integral_domain(r, s);
      const auto want = oracle::s_domain(n, indices(s.members()));
      ASSERT_EQ(w.verdict, want.has_value()) << n;
      if (want) {
        EXPECT_EQ(w.s->index(), *want);
      }
      EXPECT_TRUE(recheck_s_integral_domain(r, s, w));
    }
  }
}

TEST(SDomain, ZeroInSIsDegenerate) {
  const FiniteRing z6 = make_zn(6);
  const Witness w = is_s_integral_domain(z6, closure(z6, {0}));
  EXPECT_TRUE(w.verdict);
  EXPECT_TRUE(w.has_flag(flag::degenerate_zero_in_s));
}

TEST(Cancellation, Goldens) {
  const FiniteRing z12 = make_zn(12);
  const MultSet s3 = closure(z12, {3});
  const Witness w = has_s_cancellation(z12, s3);
  EXPECT_FALSE(w.verdict);
  EXPECT_EQ(w.kind, WitnessKind::triple_counterexample);
  EXPECT_EQ(indices(w.elements), (std::vector<std::size_t>{2, 0, 6}));
  EXPECT_TRUE(is_cancellation_counterexample(z12, s3, e(2), e(4), e(10)));
  EXPECT_FALSE(is_cancellation_counterexample(z12, s3, e(2), e(4), e(4)));

  const FiniteRing z15 = make_zn(15);
  const MultSet s6 = closure(z15, {6});
  EXPECT_EQ(indices(s6.members()), (oracle::Set{1, 6}));
  const Witness pos = has_s_cancellation(z15, s6);
  EXPECT_TRUE(pos.verdict);
  EXPECT_EQ(pos.s, e(6));
  EXPECT_FALSE(is_cancellation_counterexample(z15, s6, e(3), e(7), e(2)));
  EXPECT_EQ(z15.mul(e(6), e(7)), e(12));
  EXPECT_EQ(z15.mul(e(6), e(2)), e(12));

  const FiniteRing z7 = make_zn(7);
  EXPECT_TRUE(has_s_cancellation(z7, closure(z7, {1})).verdict);
}

TEST(SPrime, Goldens) {
  const FiniteRing z12 = make_zn(12);
  const MultSet s2 = closure(z12, {2});
  const Witness six = is_s_prime(z12, ideal(z12, {6}), s2);
  EXPECT_TRUE(six.verdict);
  EXPECT_EQ(six.s, e(2));
  const Witness four{true, WitnessKind::uniform_s, e(4), {}, {}, {}, {}};
  EXPECT_TRUE(recheck_s_prime(z12, ideal(z12, {6}), s2, four));
  EXPECT_TRUE(is_s_prime(z12, ideal(z12, {3}), s2).verdict);
  EXPECT_TRUE(is_prime(z12, ideal(z12, {3})));
  EXPECT_FALSE(is_prime(z12, ideal(z12, {6})));

  const Witness no = is_s_prime(z12, ideal(z12, {4}), closure(z12, {3}));
  EXPECT_FALSE(no.verdict);
  EXPECT_EQ(indices(no.elements), (std::vector<std::size_t>{2, 2}));
}

TEST(SPrime, MatchesOracle) {
  for (std::size_t n = 2; n <= 24; ++n) {
    const FiniteRing r = make_zn(n);
    for (const MultSet& s : enumerate_mult_sets(r)) {
      for (const Ideal& p : enumerate_ideals(r)) {
        if (p.meets(s)) {
          EXPECT_THROW((void)is_s_prime(r, p, s), Error);
          continue;
        }
        const Witness w = is_s_prime(r, p, s);
        const auto want = oracle::s_prime(n, indices(p.members()), indices(s.members()));
        ASSERT_EQ(w.verdict, want.has_value());
        if (want) {
          EXPECT_EQ(w.s->index(), *want);
        }
        EXPECT_TRUE(recheck_s_prime(r, p, s, w));
      }
    }
  }
}

TEST(SMaximal, Goldens) {
  const FiniteRing z6 = make_zn(6);
  const Witness w = is_s_maximal(z6, zero_ideal(z6), closure(z6, {2}));
  EXPECT_TRUE(w.verdict);
  EXPECT_EQ(w.s, e(2));

  const FiniteRing z12 = make_zn(12);
  const Witness n = is_s_maximal(z12, ideal(z12, {4}), closure(z12, {3}));
  EXPECT_FALSE(n.verdict);
  EXPECT_EQ(n.kind, WitnessKind::ideal_counterexample);
  ASSERT_TRUE(n.ideal.has_value());
  EXPECT_EQ(indices(n.ideal->members()), oracle::ideal_of(12, 2));

  for (const Ideal& m : maximal_ideals(z12)) {
    EXPECT_TRUE(is_s_maximal(z12, m, closure(z12, {5})).verdict);
  }
  EXPECT_TRUE(is_maximal(z12, ideal(z12, {2})));
}

TEST(SMaximal, MatchesOracle) {
  for (std::size_t n = 2; n <= 24; ++n) {
    const FiniteRing r = make_zn(n);
    for (const MultSet& s : enumerate_mult_sets(r)) {
      for (const Ideal& m : enumerate_ideals(r)) {
        if (m.meets(s)) continue;
        const Witness w = is_s_maximal(r, m, s);
        const auto want = oracle::s_maximal(n, indices(m.members()), indices(s.members()));
        ASSERT_EQ(w.verdict, want.has_value()) << n;
        if (want) {
          EXPECT_EQ(w.s->index(), *want);
        }
        EXPECT_TRUE(recheck_s_maximal(r, m, s, w));
      }
    }
  }
}

TEST(SField, Goldens) {
  const FiniteRing z6 = make_zn(6);
  EXPECT_TRUE(is_s_field(z6, closure(z6, {2})).verdict);
  EXPECT_FALSE(is_field(z6));
  const FiniteRing z15 = make_zn(15);
  const Witness w = is_s_field(z15, closure(z15, {3}));
  EXPECT_TRUE(w.verdict);
  EXPECT_EQ(w.s, e(3));
  const FiniteRing z12 = make_zn(12);
  EXPECT_FALSE(is_s_field(z12, closure(z12, {3})).verdict);
  const FiniteRing z5 = make_zn(5);
  EXPECT_TRUE(is_s_field(z5, closure(z5, {1})).verdict);
  EXPECT_TRUE(is_field(z5));
  EXPECT_THROW((void)is_s_field(z6, closure(z6, {0})), Error);
}

TEST(SProper, Goldens) {
  const FiniteRing z12 = make_zn(12);
  EXPECT_TRUE(is_s_proper(z12, ideal(z12, {6}), closure(z12, {3})).verdict);
  const FiniteRing z6 = make_zn(6);
  const MultSet s = closure(z6, {2});
  const Witness meets = is_s_proper(z6, ideal(z6, {2}), s);
  EXPECT_FALSE(meets.verdict);
  EXPECT_TRUE(meets.has_flag(flag::meets_s));
  const Witness killed = is_s_proper(z6, ideal(z6, {3}), s);
  EXPECT_FALSE(killed.verdict);
  EXPECT_TRUE(killed.has_flag(flag::annihilated));
  EXPECT_EQ(killed.s, e(2));
}

TEST(ElementClasses, Goldens) {
  const FiniteRing z12 = make_zn(12);
  const MultSet s = closure(z12, {2});
  const Witness idem = is_s_idempotent(z12, e(8), s);
  EXPECT_TRUE(idem.verdict);
  EXPECT_EQ(idem.s, e(2));
  EXPECT_NE(z12.mul(e(8), e(8)), e(8));
  const Witness zero = is_s_zero(z12, e(3), s);
  EXPECT_TRUE(zero.verdict);
  EXPECT_EQ(zero.s, e(4));
  const Witness nil = is_s_nilpotent(z12, e(6), closure(z12, {1}));
  EXPECT_TRUE(nil.verdict);
  EXPECT_EQ(nil.exponent, 2U);
  const FiniteRing z6 = make_zn(6);
  EXPECT_TRUE(is_s_non_zero(z6, e(1), closure(z6, {2})).verdict);
  EXPECT_FALSE(is_s_non_zero(z6, e(3), closure(z6, {2})).verdict);
}

TEST(SReduced, Goldens) {
  const FiniteRing z6 = make_zn(6);
  EXPECT_TRUE(is_s_reduced(z6, closure(z6, {1})).verdict);
  const FiniteRing z4 = make_zn(4);
  const Witness w = is_s_reduced(z4, closure(z4, {1}));
  EXPECT_FALSE(w.verdict);
  EXPECT_EQ(indices(w.elements), (std::vector<std::size_t>{2}));
  EXPECT_TRUE(is_s_reduced(z4, closure(z4, {2})).verdict);
}

TEST(ClassicalPredicates, MatchPrimality) {
  for (std::size_t n = 2; n <= 30; ++n) {
    const FiniteRing r = make_zn(n);
    EXPECT_EQ(is_integral_domain(r), oracle::is_prime_number(n));
    EXPECT_EQ(is_field(r), oracle::is_prime_number(n));
  }
  EXPECT_FALSE(is_integral_domain(make_zn(6)));
}

TEST(SFinite, AlwaysTrue) {
  const FiniteRing z12 = make_zn(12);
  const Ideal two = ideal(z12, {2});
  const Witness w = s_finite_witness(z12, two, closure(z12, {3}));
  EXPECT_TRUE(w.verdict);
  EXPECT_EQ(w.s, e(1));
  ASSERT_TRUE(w.ideal.has_value());
  EXPECT_EQ(w.ideal->members(), two.members());
  EXPECT_TRUE(s_finite_witness(make_zn(6), zero_ideal(make_zn(6)), closure(make_zn(6), {1})).verdict);
}

TEST(Recheck, RejectsForgedWitnesses) {
  const FiniteRing z6 = make_zn(6);
  const MultSet s = closure(z6, {2});
  const Witness bad{true, WitnessKind::uniform_s, e(1), {}, {}, {}, {}};
  EXPECT_FALSE(recheck_s_integral_domain(z6, s, bad));
  const Witness outside{true, WitnessKind::uniform_s, e(3), {}, {}, {}, {}};
  EXPECT_FALSE(recheck_s_integral_domain(z6, s, outside));
  const Witness wrong_pair{false, WitnessKind::pair_counterexample, {}, {}, {e(2), e(3)}, {}, {}};
  EXPECT_FALSE(recheck_s_integral_domain(z6, s, wrong_pair));
}

TEST(Disjointness, Throws) {
  const FiniteRing z6 = make_zn(6);
  try {
    require_disjoint(ideal(z6, {2}), closure(z6, {2}));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::disjointness);
  }
  try {
    require_disjoint(zero_ideal(z6), closure(z6, {0}));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::zero_in_mult_set);
  }
}

}  // namespace
}  // namespace slab
