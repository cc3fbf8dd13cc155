#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracle.hpp"
#include "slab/classify.hpp"
#include "slab/error.hpp"
#include "slab/localization.hpp"

namespace slab {
namespace {

using test::closure;
using test::e;
using test::ideal;
using test::indices;

TEST(Localize, Goldens) {
  const FiniteRing z6 = make_zn(6);
  const LocalizationResult a = localize(z6, closure(z6, {2}));
  EXPECT_TRUE(find_isomorphism(a.local_ring, make_zn(3)).has_value());
  EXPECT_EQ(indices(a.kernel.members()), (oracle::Set{0, 3}));

  const FiniteRing z12 = make_zn(12);
  const LocalizationResult b = localize(z12, closure(z12, {2}));
  EXPECT_TRUE(find_isomorphism(b.local_ring, make_zn(3)).has_value());
  EXPECT_EQ(indices(b.kernel.members()), (oracle::Set{0, 3, 6, 9}));

  const LocalizationResult c = localize(z12, closure(z12, {3}));
  EXPECT_TRUE(find_isomorphism(c.local_ring, make_zn(4)).has_value());
  EXPECT_EQ(indices(c.kernel.members()), (oracle::Set{0, 4, 8}));

  const FiniteRing z5 = make_zn(5);
  const LocalizationResult d = localize(z5, closure(z5, {1}));
  EXPECT_TRUE(find_isomorphism(d.local_ring, z5).has_value());
  EXPECT_TRUE(d.kernel.is_zero());
}

TEST(Localize, ZeroInSGivesZeroRing) {
  const FiniteRing z6 = make_zn(6);
  const LocalizationResult l = localize(z6, closure(z6, {0}));
  EXPECT_TRUE(l.degenerate);
  EXPECT_EQ(l.local_ring.order(), 1U);
  EXPECT_TRUE(l.kernel.is_whole());
}

TEST(Localize, OrderMatchesFractionOracle) {
  for (std::size_t n = 2; n <= 24; ++n) {
    const FiniteRing r = make_zn(n);
    for (const MultSet& s : enumerate_mult_sets(r)) {
      const oracle::Set members = indices(s.members());
      const LocalizationResult l = localize(r, s);
      ASSERT_EQ(l.local_ring.order(), oracle::fraction_classes(n, members)) << n;
      EXPECT_EQ(indices(l.kernel.members()), oracle::torsion(n, members));
      EXPECT_EQ(indices(s_torsion(r, s)), oracle::torsion(n, members));
    }
  }
}

TEST(Localize, FractionsRespectEquivalence) {
  const FiniteRing z12 = make_zn(12);
  const MultSet s = closure(z12, {2});
  const LocalizationResult l = localize(z12, s);
  for (Element a : z12.elements()) {
    for (Element t : s.members()) {
      for (Element b : z12.elements()) {
        for (Element u : s.members()) {
          const Element diff = z12.sub(z12.mul(a, u), z12.mul(b, t));
          const bool related = std::ranges::any_of(
              s.members().to_vector(), [&](Element v) { return z12.mul(v, diff) == z12.zero(); });
          EXPECT_EQ(l.fraction(a, t) == l.fraction(b, u), related);
        }
      }
    }
  }
  EXPECT_THROW((void)l.fraction(e(1), e(3)), Error);
}

TEST(Localize, PhiIsHomomorphismWithUnitImages) {
  const FiniteRing r = direct_product(make_zn(2), make_zn(6));
  for (const MultSet& s : enumerate_mult_sets(r)) {
    const LocalizationResult l = localize(r, s);
    EXPECT_TRUE(is_ring_homomorphism(r, l.local_ring, l.phi));
    for (Element t : s.members()) EXPECT_TRUE(inverse(l.local_ring, l.phi[t.index()]).has_value());
    for (Element a : r.elements()) EXPECT_EQ(l.fraction(a, r.one()), l.phi[a.index()]);
  }
}

TEST(Extend, CoincidentExtensions) {
  const FiniteRing z12 = make_zn(12);
  const LocalizationResult l = localize(z12, closure(z12, {2}));
  const Ideal three = extend_ideal(l, ideal(z12, {3}));
  const Ideal six = extend_ideal(l, ideal(z12, {6}));
  EXPECT_TRUE(three.is_zero());
  EXPECT_EQ(three.members(), six.members());
  EXPECT_TRUE(extend_ideal(l, zero_ideal(z12)).is_zero());
  EXPECT_TRUE(extend_ideal(l, ideal(z12, {2})).is_whole());
  EXPECT_THROW((void)extend_ideal(l, zero_ideal(make_zn(6))), Error);
}

TEST(Theorems, Goldens) {
  const FiniteRing z6 = make_zn(6);
  const LocalizationTheorems t = check_localization_theorems(z6, closure(z6, {2}));
  EXPECT_TRUE(t.all_hold());
  EXPECT_TRUE(is_field(t.localization.local_ring));
  ASSERT_EQ(t.clauses.size(), 4U);

  const FiniteRing z12 = make_zn(12);
  const LocalizationTheorems u = check_localization_theorems(z12, closure(z12, {3}));
  EXPECT_TRUE(u.all_hold());
  EXPECT_FALSE(u.clauses[0].lhs);
  EXPECT_FALSE(u.clauses[0].rhs);

  const FiniteRing z5 = make_zn(5);
  EXPECT_TRUE(check_localization_theorems(z5, closure(z5, {1})).all_hold());
}

}  // namespace
}  // namespace slab
