#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "slab/classify.hpp"
#include "slab/krull.hpp"
#include "slab/localization.hpp"
#include "slab/survey.hpp"

namespace slab {
namespace {

std::vector<FiniteRing> sample_rings() {
  SurveyOptions o;
  o.up_to = 16;
  o.composite_up_to = 12;
  return survey_rings(o);
}

class EveryRing : public ::testing::TestWithParam<std::size_t> {
 protected:
  static const std::vector<FiniteRing>& rings() {
    static const std::vector<FiniteRing> all = sample_rings();
    return all;
  }
  const FiniteRing& ring() const { return rings()[GetParam()]; }
};

TEST_P(EveryRing, VerdictsSurviveRelabeling) {
  const FiniteRing& r = ring();
  const RingIso f = relabeled_copy(r, static_cast<unsigned>(GetParam()) + 7U);
  const FiniteRing& t = f.target();
  for (const MultSet& s : enumerate_mult_sets(r)) {
    const MultSet fs = apply_iso(f, s);
    EXPECT_EQ(is_s_integral_domain(r, s).verdict, is_s_integral_domain(t, fs).verdict);
    EXPECT_EQ(has_s_cancellation(r, s).verdict, has_s_cancellation(t, fs).verdict);
    EXPECT_EQ(is_s_field(r, s).verdict, is_s_field(t, fs).verdict);
    EXPECT_EQ(localize(r, s).local_ring.order(), localize(t, fs).local_ring.order());
    for (const Ideal& i : enumerate_ideals(r)) {
      if (i.meets(s)) continue;
      const Ideal fi = apply_iso(f, i);
      EXPECT_EQ(is_s_prime(r, i, s).verdict, is_s_prime(t, fi, fs).verdict);
      EXPECT_EQ(is_s_maximal(r, i, s).verdict, is_s_maximal(t, fi, fs).verdict);
      EXPECT_EQ(is_s_primary(r, i, s).verdict, is_s_primary(t, fi, fs).verdict);
    }
  }
}

TEST_P(EveryRing, WitnessesRecheck) {
  const FiniteRing& r = ring();
  for (const MultSet& s : enumerate_mult_sets(r)) {
    EXPECT_TRUE(recheck_s_integral_domain(r, s, is_s_integral_domain(r, s)));
    EXPECT_TRUE(recheck_s_cancellation(r, s, has_s_cancellation(r, s)));
    EXPECT_TRUE(recheck_s_field(r, s, is_s_field(r, s)));
    EXPECT_TRUE(recheck_s_reduced(r, s, is_s_reduced(r, s)));
    for (const Ideal& i : enumerate_ideals(r)) {
      if (i.meets(s)) continue;
      EXPECT_TRUE(recheck_s_prime(r, i, s, is_s_prime(r, i, s)));
      EXPECT_TRUE(recheck_s_maximal(r, i, s, is_s_maximal(r, i, s)));
      EXPECT_TRUE(recheck_s_proper(r, i, s, is_s_proper(r, i, s)));
    }
  }
}

TEST_P(EveryRing, DomainCharacterizations) {
  const FiniteRing& r = ring();
  for (const MultSet& s : enumerate_mult_sets(r)) {
    const bool dom = is_s_integral_domain(r, s).verdict;
    EXPECT_EQ(dom, has_s_cancellation(r, s).verdict);
    EXPECT_EQ(dom, is_s_prime(r, zero_ideal(r), s).verdict);
    EXPECT_EQ(dom, is_integral_domain(localize(r, s).local_ring));
    if (dom) {
      EXPECT_TRUE(is_s_field(r, s).verdict);
      EXPECT_TRUE(is_s_reduced(r, s).verdict);
    }
    EXPECT_EQ(is_s_field(r, s).verdict, std::ranges::none_of(enumerate_ideals(r), [&](const Ideal& i) {
                return !i.is_zero() && !i.meets(s) && is_s_proper(r, i, s).verdict;
              }));
  }
}

TEST_P(EveryRing, QuotientTransfer) {
  const FiniteRing& r = ring();
  for (const MultSet& s : enumerate_mult_sets(r)) {
    for (const Ideal& p : enumerate_ideals(r)) {
      if (p.meets(s)) continue;
      const QuotientResult q = quotient_ring(r, p);
      const MultSet qs = image_mult_set(s, q.ring, q.projection);
      EXPECT_EQ(is_s_prime(r, p, s).verdict, is_s_integral_domain(q.ring, qs).verdict);
      EXPECT_EQ(is_s_maximal(r, p, s).verdict, is_s_field(q.ring, qs).verdict);
    }
  }
}

TEST_P(EveryRing, LocalizationOracle) {
  const FiniteRing& r = ring();
  for (const MultSet& s : enumerate_mult_sets(r)) {
    const LocalizationResult l = localize(r, s);
    const ElementSet torsion = s_torsion(r, s);
    ASSERT_EQ(l.kernel.members(), torsion);
    const QuotientResult q = quotient_ring(r, Ideal::from_members(r, torsion));
    EXPECT_TRUE(find_isomorphism(l.local_ring, q.ring).has_value()) << r.recipe();
    EXPECT_TRUE(check_localization_theorems(r, s).all_hold());
    if (is_proper_mult_set(s)) {
      EXPECT_TRUE(l.kernel.is_zero());
    }
  }
}

TEST_P(EveryRing, KrullWitnessesExist) {
  const FiniteRing& r = ring();
  for (const MultSet& s : enumerate_mult_sets(r)) {
    for (const Ideal& i : enumerate_ideals(r)) {
      if (i.meets(s)) continue;
      const Witness w = pmsb_witness(r, i, s);
      EXPECT_TRUE(scaled(ideal_power(radical(i), *w.exponent), *w.s).subset_of(i.members()));
      const AnnihilatorResult a = krull_annihilator(r, i, s);
      EXPECT_EQ(scaled(a.chain.intersection, r.add(a.t, a.a)), ElementSet{r.zero()});
      ElementSet meet = r.all();
      for (const Ideal& q : s_primary_decomposition(r, i, s)) {
        EXPECT_TRUE(is_s_primary(r, q, s).verdict);
        EXPECT_FALSE(q.meets(s));
        meet &= q.members();
      }
      EXPECT_EQ(meet, i.members());
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SurveyFamily, EveryRing, ::testing::Range<std::size_t>(0, 69),
                         [](const auto& info) { return "ring" + std::to_string(info.param); });

TEST(SurveyFamily, SampleSize) { EXPECT_EQ(sample_rings().size(), 69U); }

TEST(SurveyFamily, DeterministicAcrossJobCounts) {
  SurveyOptions one;
  one.up_to = 10;
  one.composite_up_to = 8;
  one.jobs = 1;
  SurveyOptions four = one;
  four.jobs = 4;
  const SurveyResult a = run_survey(one);
  const SurveyResult b = run_survey(four);
  ASSERT_EQ(a.tallies.size(), b.tallies.size());
  for (std::size_t k = 0; k < a.tallies.size(); ++k) {
    EXPECT_EQ(a.tallies[k].id, b.tallies[k].id);
    EXPECT_EQ(a.tallies[k].checked, b.tallies[k].checked);
  }
  EXPECT_EQ(a.rings, b.rings);
  EXPECT_TRUE(a.clean());
}

}  // namespace
}  // namespace slab
