#include <gtest/gtest.h>

#include <random>

#include "fqlab/contfrac.hpp"
#include "fqlab/errors.hpp"
#include "support.hpp"

using namespace fqlab;
using fqlab::support::P;
using fqlab::support::R;

namespace {

Rational random_rational(const FieldPtr& F, std::mt19937_64& rng) {
  const Poly den = support::random_poly_deg(F, 1 + rng() % 8, rng);
  return Rational(support::random_poly(F, 9, rng), den);
}

Poly sign_power(const FieldPtr& F, std::size_t n) {
  return n % 2 ? -Poly::constant(F, 1) : Poly::constant(F, 1);
}

}  // namespace

TEST(CFExpand, Examples) {
  auto F2 = make_field(2);
  const CFExpansion z = cf_expand(KElem::zero(F2), 8);
  ASSERT_EQ(z.quotients.size(), 1u);
  EXPECT_TRUE(z.quotients[0].is_zero());
  EXPECT_TRUE(z.complete);
  const CFExpansion a = cf_expand(R(F2, "1", "t"), 8);
  EXPECT_EQ(a.quotients, (std::vector<Poly>{Poly(F2), P(F2, "t")}));
  // frozen: cf_q2_t2p1_over_t3
  const CFExpansion b = cf_expand(R(F2, "t^2 + 1", "t^3"), 8);
  EXPECT_EQ(b.quotients, (std::vector<Poly>{Poly(F2), P(F2, "t"), P(F2, "t"), P(F2, "t")}));
}

TEST(CFExpand, MaxTermsAndExhaustion) {
  auto F3 = make_field(3);
  const CFExpansion a = cf_expand(R(F3, "1", "t^5 + t + 1"), 1);
  EXPECT_EQ(a.quotients.size(), 1u);
  EXPECT_FALSE(a.complete);
  const CFExpansion s = cf_expand(KElem(random_series(F3, -6, 3)), 100);
  EXPECT_TRUE(s.exhausted);
  EXPECT_LT(s.quotients.size(), 100u);
}

TEST(Convergents, Examples) {
  auto F2 = make_field(2);
  const auto tab = convergents(cf_expand(R(F2, "1", "t"), 8));
  ASSERT_EQ(tab.size(), 2u);
  EXPECT_EQ(tab[0].a, Poly(F2));
  EXPECT_EQ(tab[0].g, Poly::constant(F2, 1));
  EXPECT_EQ(tab[1].a, Poly::constant(F2, 1));
  EXPECT_EQ(tab[1].g, P(F2, "t"));
  const auto t2 = convergents(cf_expand(R(F2, "t^2 + 1", "t^3"), 8));
  EXPECT_EQ(Rational(t2.back().a, t2.back().g), Rational(P(F2, "t^2 + 1"), P(F2, "t^3")));
}

TEST(Convergents, FuzzedRationals) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 500; ++i) {
    auto F = make_field(std::vector<unsigned>{2, 3, 5}[i % 3]);
    const Rational alpha = random_rational(F, rng);
    const CFExpansion cf = cf_expand(alpha, 64);
    ASSERT_TRUE(cf.complete);
    for (std::size_t n = 1; n < cf.quotients.size(); ++n) EXPECT_GT(cf.quotients[n].degree(), Ord(0));
    const auto tab = convergents(cf);
    ASSERT_EQ(tab.size(), cf.quotients.size());
    Poly a_prev = Poly::constant(F, 1), g_prev(F);
    for (std::size_t n = 0; n < tab.size(); ++n) {
      EXPECT_EQ(tab[n].g * a_prev - tab[n].a * g_prev, sign_power(F, n));
      if (n > 0) EXPECT_LT(tab[n - 1].g.degree(), tab[n].g.degree());
      const Quality qn = approx_quality(alpha, cf, tab, n);
      EXPECT_TRUE(qn.agrees()) << alpha.str() << " n=" << n;
      a_prev = tab[n].a;
      g_prev = tab[n].g;
    }
    EXPECT_EQ(Rational(tab.back().a, tab.back().g), alpha);
    EXPECT_TRUE(approx_quality(alpha, cf, tab, tab.size() - 1).quality.is_neg_inf());
  }
}

TEST(ApproxQuality, Examples) {
  auto F2 = make_field(2);
  const KElem a = R(F2, "1", "t");
  const CFExpansion cf = cf_expand(a, 8);
  const auto tab = convergents(cf);
  EXPECT_EQ(approx_quality(a, cf, tab, 0).quality, Ord(-1));
  const KElem b = R(F2, "t^2 + 1", "t^3");
  const CFExpansion cfb = cf_expand(b, 8);
  const auto tb = convergents(cfb);
  const Quality q1 = approx_quality(b, cfb, tb, 1);
  EXPECT_EQ(q1.quality, Ord(-2));
  EXPECT_EQ(q1.predicted, Ord(-tb[2].g.degree().value()));
}

TEST(ApproxQuality, TruncatedSeries) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 50; ++i) {
    auto F = make_field(i % 2 ? 2 : 3);
    const KElem alpha(random_series(F, -40, rng()));
    const CFExpansion cf = cf_expand(alpha, 64);
    const auto tab = convergents(cf);
    for (std::size_t n = 0; n + 1 < tab.size(); ++n) EXPECT_TRUE(approx_quality(alpha, cf, tab, n).agrees());
  }
}

TEST(Legendre, Examples) {
  auto F2 = make_field(2);
  const LegendreResult r = legendre_recover(R(F2, "1", "t"), Poly(F2), Poly::constant(F2, 1));
  EXPECT_TRUE(r.hypothesis);
  EXPECT_EQ(r.index, std::optional<std::size_t>(0));
  const KElem b = R(F2, "t^2 + 1", "t^3");
  const auto tb = convergents(cf_expand(b, 8));
  for (std::size_t n = 0; n < tb.size(); ++n) {
    const LegendreResult rn = legendre_recover(b, tb[n].a, tb[n].g);
    EXPECT_TRUE(rn.hypothesis);
    EXPECT_EQ(rn.index, std::optional<std::size_t>(n));
  }
  // 1/1 is far from 1/t: ord(1/t - 1) = 0 is not below 0.
  EXPECT_FALSE(legendre_recover(R(F2, "1", "t"), Poly::constant(F2, 1), Poly::constant(F2, 1)).hypothesis);
  EXPECT_THROW(legendre_recover(R(F2, "1", "t"), Poly(F2), Poly(F2)), DomainError);
}

TEST(Legendre, Completeness) {
  std::mt19937_64 rng(43);
  int tried = 0;
  for (int i = 0; i < 2000; ++i) {
    auto F = make_field(std::vector<unsigned>{2, 3, 5}[i % 3]);
    const Rational alpha = random_rational(F, rng);
    const Poly g = support::random_poly_deg(F, rng() % 6, rng) * Poly::constant(F, 1);
    const Poly a = (Rational(g) * alpha).poly_part();
    const LegendreResult r = legendre_recover(alpha, a, g);
    const bool hyp = (KElem(Rational(g) * alpha - Rational(a))).ord() < Ord(-g.degree().value());
    EXPECT_EQ(r.hypothesis, hyp);
    if (!hyp) continue;
    ++tried;
    ASSERT_TRUE(r.index.has_value());
    const auto tab = convergents(cf_expand(alpha, 64));
    EXPECT_EQ(Rational(tab[*r.index].a, tab[*r.index].g), Rational(a, g));
  }
  EXPECT_GT(tried, 100);
}

TEST(Dirichlet, Examples) {
  auto F2 = make_field(2);
  const Approximation z = dirichlet_approx(R(F2, "1", "t^7"), 2, 3);
  EXPECT_TRUE(z.a.is_zero());
  EXPECT_EQ(z.g, Poly::constant(F2, 1));
  const Approximation e = dirichlet_approx(R(F2, "t + 1", "t^3 + t + 1"), 2, 3);
  EXPECT_EQ(e.a, P(F2, "t + 1"));
  EXPECT_EQ(e.g, P(F2, "t^3 + t + 1"));
  EXPECT_TRUE(e.quality.is_neg_inf());
}

TEST(Dirichlet, FuzzedSeries) {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 200; ++i) {
    auto F = make_field(std::vector<unsigned>{2, 3, 5}[i % 3]);
    const KElem alpha(random_series(F, -30, rng()));
    const Approximation d = dirichlet_approx(alpha, 2, 3);
    EXPECT_LE(d.g.degree(), Ord(6));
    EXPECT_TRUE(gcd(d.a, d.g).degree() == Ord(0));
    EXPECT_TRUE(certify_ord_below(KElem::poly(d.g) * alpha - KElem::poly(d.a), -6));
  }
}

TEST(Dirichlet, InsufficientPrecision) {
  auto F2 = make_field(2);
  const KElem alpha(random_series(F2, -4, 5));
  EXPECT_THROW(dirichlet_approx(alpha, 3, 3), PrecisionError);
}

TEST(RationalityProbe, RationalSucceedsEverywhere) {
  std::mt19937_64 rng(45);
  for (int i = 0; i < 30; ++i) {
    auto F = make_field(i % 2 ? 2 : 3);
    const Rational alpha = random_rational(F, rng);
    const RationalityReport r = rationality_probe(alpha, Kappa{2, 1}, {9, 10, 12, 20});
    EXPECT_TRUE(r.all_found());
  }
}

TEST(RationalityProbe, InverseT) {
  auto F2 = make_field(2);
  const RationalityReport r = rationality_probe(R(F2, "1", "t"), Kappa{2, 1}, {1, 2, 3});
  // ord g < N forces g constant at N = 1, and ord(1/t) = -1 > -2.
  EXPECT_FALSE(r.rows[0].found);
  EXPECT_TRUE(r.rows[1].found);
  EXPECT_EQ(r.rows[1].best->g, P(F2, "t"));
  EXPECT_TRUE(r.rows[2].found);
}

TEST(RationalityProbe, KernelElementFailsSomewhere) {
  auto F2 = make_field(2);
  std::vector<unsigned> Ns;
  for (unsigned N = 1; N <= 12; ++N) Ns.push_back(N);
  for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
    const KElem alpha(kernel_element(F2, -40, seed));
    EXPECT_FALSE(rationality_probe(alpha, Kappa{2, 1}, Ns).all_found()) << seed;
  }
}

TEST(RationalityProbe, PrecisionError) {
  auto F2 = make_field(2);
  EXPECT_THROW(rationality_probe(KElem(random_series(F2, -10, 7)), Kappa{2, 1}, {20}), PrecisionError);
}
