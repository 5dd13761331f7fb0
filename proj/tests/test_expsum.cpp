#include <gtest/gtest.h>

#include <random>

#include "fqlab/errors.hpp"
#include "fqlab/expsum.hpp"
#include "support.hpp"

using namespace fqlab;
using fqlab::support::P;
using fqlab::support::R;

namespace {

ExpPoly linear(const KElem& a) {
  ExpPoly f(a.field());
  f.set(1, a);
  return f;
}

ExpPoly random_exppoly(const FieldPtr& F, unsigned N, std::mt19937_64& rng) {
  ExpPoly f(F);
  const unsigned terms = 1 + rng() % 3;
  for (unsigned i = 0; i < terms; ++i) f.set(1 + rng() % 5, KElem::zero(F));
  const long floor = f.default_floor(N);
  for (auto r : f.support()) f.set(r, KElem(random_series(F, floor, rng())));
  f.set(0, KElem(random_series(F, -3, rng())));
  return f;
}

}  // namespace

TEST(CharSum, ZeroAndFull) {
  CharSum a(3);
  a.counts = {3, 3, 3};
  EXPECT_TRUE(a.is_zero());
  EXPECT_NEAR(a.magnitude(), 0.0, 1e-12);
  CharSum b(3);
  b.counts = {9, 0, 0};
  EXPECT_TRUE(b.is_full());
  EXPECT_DOUBLE_EQ(b.normalized(), 1.0);
  CharSum c(2);
  c.counts = {3, 1};
  EXPECT_DOUBLE_EQ(c.magnitude(), 2.0);
}

TEST(EOf, Examples) {
  EXPECT_EQ(e_of(KElem::zero(make_field(2))), 0u);
  EXPECT_EQ(e_of(R(make_field(2), "1", "t")), 1u);
  auto F3 = make_field(3);
  EXPECT_EQ(e_of(R(F3, "1", "t")*KElem::poly(P(F3, "2")) + R(F3, "1", "t^2")), 2u);
  auto F4 = make_field(2, 2);
  EXPECT_EQ(e_of(KElem::poly(Poly::constant(F4, 2)) * R(F4, "1", "t")), 1u);  // trace(x) = 1
  EXPECT_THROW(e_of(KElem(Series(F3, 0))), PrecisionError);
}

TEST(WeylSum, Examples) {
  auto F2 = make_field(2);
  const CharSum z = weyl_sum(ExpPoly(F2), 3);
  EXPECT_EQ(z.counts, (std::vector<std::uint64_t>{8, 0}));
  auto F3 = make_field(3);
  EXPECT_EQ(weyl_sum(linear(R(F3, "1", "t^3")), 2).counts, (std::vector<std::uint64_t>{9, 0, 0}));
  const CharSum s = weyl_sum(linear(R(F3, "1", "t")), 1);
  EXPECT_EQ(s.counts, (std::vector<std::uint64_t>{1, 1, 1}));
  EXPECT_TRUE(s.is_zero());
}

TEST(WeylSum, PrecisionAndBudget) {
  auto F2 = make_field(2);
  ExpPoly f(F2);
  f.set(3, KElem(random_series(F2, -5, 1)));
  EXPECT_THROW(weyl_sum(f, 4), PrecisionError);  // needs floor -(1 + 3*3)
  f.set(3, KElem(random_series(F2, -10, 1)));
  EXPECT_NO_THROW(weyl_sum(f, 4));
  EXPECT_THROW(weyl_sum(f, 20, RunOptions{1 << 10, 1}), BudgetError);
}

TEST(WeylSum, HistogramConservation) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 30; ++i) {
    auto F = i % 2 ? make_field(3) : make_field(2, 2);
    const unsigned N = 1 + rng() % 4;
    EXPECT_EQ(weyl_sum(random_exppoly(F, N, rng), N).total(), checked_power(F->q(), N, kDefaultBudget));
  }
}

TEST(WeylSum, StrategiesAgree) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 40; ++i) {
    auto F = i % 3 == 0 ? make_field(2) : i % 3 == 1 ? make_field(3) : make_field(5);
    const unsigned N = 1 + rng() % 4;
    const ExpPoly f = random_exppoly(F, N, rng);
    EXPECT_EQ(weyl_sum(f, N, {}, EvalStrategy::Table), weyl_sum(f, N, {}, EvalStrategy::Direct));
  }
}

TEST(WeylSum, AgreesWithPointwiseEvaluation) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) {
    auto F = i % 2 ? make_field(2) : make_field(3);
    const unsigned N = 1 + rng() % 3;
    const ExpPoly f = random_exppoly(F, N, rng);
    CharSum direct(F->p());
    for (std::uint64_t x = 0; x < checked_power(F->q(), N, kDefaultBudget); ++x)
      direct.add(e_of(f.eval(Poly::from_index(F, x))));
    EXPECT_EQ(weyl_sum(f, N), direct);
  }
}

TEST(WeylSum, ParallelChunksMatchSequential) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 10; ++i) {
    auto F = i % 2 ? make_field(2) : make_field(3);
    const unsigned N = 3 + rng() % 3;
    const ExpPoly f = random_exppoly(F, N, rng);
    const CharSum seq = weyl_sum(f, N);
    const std::uint64_t n = checked_power(F->q(), N, kDefaultBudget);
    for (unsigned threads : {2u, 3u, 7u}) EXPECT_EQ(weyl_sum(f, N, RunOptions{kDefaultBudget, threads}), seq);
    // an irregular partition merged by hand
    CharSum merged(F->p());
    std::uint64_t lo = 0;
    while (lo < n) {
      const std::uint64_t hi = std::min(n, lo + 1 + rng() % 17);
      merged += weyl_sum_range(f, N, lo, hi);
      lo = hi;
    }
    EXPECT_EQ(merged, seq);
  }
}

TEST(TwistedSum, Examples) {
  auto F2 = make_field(2);
  const ExpPoly f = linear(R(F2, "1", "t^2"));
  EXPECT_EQ(twisted_sum(f, Poly::constant(F2, 1), 2), weyl_sum(f, 2));
  EXPECT_EQ(twisted_sum(f, Poly(F2), 3).counts, (std::vector<std::uint64_t>{8, 0}));
  // frozen: twist_q2_counts
  EXPECT_EQ(twisted_sum(f, P(F2, "t"), 1).counts, (std::vector<std::uint64_t>{1, 1}));
}

TEST(TwistedSum, ResiduesAddOverM) {
  std::mt19937_64 rng(25);
  auto F2 = make_field(2);
  for (unsigned N = 1; N <= 3; ++N) {
    const ExpPoly f = random_exppoly(F2, N + 3, rng);
    for (int t = 0; t < 10; ++t) {
      const Poly m1 = support::random_poly(F2, 3, rng), m2 = support::random_poly(F2, 3, rng);
      for (std::uint64_t xi = 0; xi < (1u << N); ++xi) {
        const Poly x = Poly::from_index(F2, xi);
        const unsigned r1 = e_of(f.scaled(m1).eval(x)), r2 = e_of(f.scaled(m2).eval(x));
        EXPECT_EQ(e_of(f.scaled(m1 + m2).eval(x)), (r1 + r2) % 2);
      }
    }
  }
}

TEST(Orthogonality, Examples) {
  auto F2 = make_field(2);
  EXPECT_EQ(orthogonality(KElem::poly(P(F2, "t^2 + 1")), 3), Orthogonality::Full);
  EXPECT_EQ(orthogonality(R(F2, "1", "t^2"), 1), Orthogonality::Full);
  EXPECT_EQ(orthogonality(R(F2, "1", "t"), 1), Orthogonality::Zero);
  EXPECT_THROW(orthogonality(KElem(Series(F2, -2)), 4), PrecisionError);
}

TEST(Orthogonality, ExhaustiveSmall) {
  for (unsigned q : {2u, 3u}) {
    auto F = make_field(q);
    for (unsigned dg = 0; dg <= 2; ++dg)
      for (const Poly& g : [&] {
             std::vector<Poly> gs;
             for (std::uint64_t i = 0; i < checked_power(q, dg, kDefaultBudget); ++i)
               gs.push_back(Poly::from_index(F, i) + Poly::t_pow(F, dg));
             return gs;
           }())
        for (std::uint64_t ai = 0; ai < checked_power(q, dg, kDefaultBudget); ++ai) {
          const KElem alpha = Rational(Poly::from_index(F, ai), g);
          for (unsigned N = 0; N <= 3; ++N) {
            const CharSum s = weyl_sum(linear(alpha), N);
            if (orthogonality(alpha, N) == Orthogonality::Full) EXPECT_TRUE(s.is_full());
            else EXPECT_TRUE(s.is_zero() && !s.is_full());
          }
        }
  }
}
