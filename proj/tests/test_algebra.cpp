#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fqlab/enumerate.hpp"
#include "fqlab/errors.hpp"
#include "fqlab/field.hpp"
#include "fqlab/poly.hpp"
#include "fqlab/upoly.hpp"
#include "support.hpp"

using namespace fqlab;
using fqlab::support::P;

TEST(Field, AdditiveIdentityAndCharacteristic) {
  for (auto F : {make_field(2), make_field(3), make_field(2, 2), make_field(3, 2)})
    for (unsigned a = 0; a < F->q(); ++a) EXPECT_EQ(F->add(static_cast<Elem>(a), 0), a);
  auto F2 = make_field(2);
  EXPECT_EQ(F2->add(1, 1), 0);
}

TEST(Field, F4Multiplication) {
  // frozen: derived.json f4_x_times_x (x has index 2, x + 1 index 3)
  auto F4 = make_field(2, 2);
  EXPECT_EQ(F4->spec().modulus, (std::vector<unsigned>{1, 1, 1}));
  EXPECT_EQ(F4->mul(2, 2), 3);
}

TEST(Field, AxiomsAndFermat) {
  for (auto F : {make_field(2), make_field(5), make_field(7), make_field(2, 2), make_field(2, 3), make_field(3, 2)}) {
    const unsigned q = F->q();
    for (unsigned a = 0; a < q; ++a) {
      const Elem ea = static_cast<Elem>(a);
      EXPECT_EQ(F->add(ea, F->neg(ea)), 0);
      if (a) {
        EXPECT_EQ(F->mul(ea, F->inv(ea)), 1);
        EXPECT_EQ(F->pow(ea, q - 1), 1);
      }
      for (unsigned b = 0; b < q; ++b) {
        const Elem eb = static_cast<Elem>(b);
        EXPECT_EQ(F->mul(ea, eb), F->mul(eb, ea));
        for (unsigned c = 0; c < q; ++c) {
          const Elem ec = static_cast<Elem>(c);
          EXPECT_EQ(F->mul(ea, F->add(eb, ec)), F->add(F->mul(ea, eb), F->mul(ea, ec)));
        }
      }
    }
  }
}

TEST(Field, InverseOfZeroThrows) { EXPECT_THROW(make_field(3)->inv(0), DomainError); }

TEST(Field, Trace) {
  auto F4 = make_field(2, 2);
  EXPECT_EQ(F4->trace(2), 1u);  // frozen: f4_trace_x
  EXPECT_EQ(F4->char_value(2), 1u);
  auto F5 = make_field(5);
  for (unsigned a = 0; a < 5; ++a) EXPECT_EQ(F5->trace(static_cast<Elem>(a)), a);
  EXPECT_EQ(make_field(2)->char_value(1), 1u);
  EXPECT_EQ(F4->trace(0), 0u);
}

TEST(Field, TraceLinearAndSurjective) {
  // frozen: trace_surjective
  for (auto F : {make_field(2), make_field(3), make_field(2, 2), make_field(5), make_field(7), make_field(2, 3),
                 make_field(3, 2)}) {
    std::set<unsigned> image;
    for (unsigned a = 0; a < F->q(); ++a) {
      image.insert(F->trace(static_cast<Elem>(a)));
      for (unsigned b = 0; b < F->q(); ++b)
        EXPECT_EQ(F->trace(F->add(static_cast<Elem>(a), static_cast<Elem>(b))),
                  (F->trace(static_cast<Elem>(a)) + F->trace(static_cast<Elem>(b))) % F->p());
      for (unsigned c = 0; c < F->p(); ++c)
        EXPECT_EQ(F->trace(F->mul(F->from_int(c), static_cast<Elem>(a))), (c * F->trace(static_cast<Elem>(a))) % F->p());
    }
    EXPECT_EQ(image.size(), F->p()) << F->spec_string();
  }
}

TEST(Field, SpecParsing) {
  EXPECT_EQ(parse_field_spec("q=9").m, 2u);
  EXPECT_EQ(parse_field_spec("q=2^3").modulus, (std::vector<unsigned>{1, 1, 0, 1}));
  EXPECT_EQ(parse_field_spec("q=9,modulus=x^2+x+2").modulus, (std::vector<unsigned>{2, 1, 1}));
  EXPECT_THROW(parse_field_spec("q=6"), std::exception);
  EXPECT_THROW(make_field(parse_field_spec("q=4,modulus=x^2+1")), std::exception);  // reducible
  EXPECT_EQ(make_field(2, 2)->spec_string(), "q=2^2,modulus=x^2+x+1");
}

TEST(Poly, Basics) {
  auto F = make_field(2);
  const Poly f = P(F, "t^3 + t + 1");
  EXPECT_EQ(f * Poly::constant(F, 1), f);
  EXPECT_TRUE(Poly(F).degree().is_neg_inf());
  EXPECT_EQ(Poly(F).degree(), Ord::neg_inf());
  const DivMod qr = divmod(P(F, "t^2 + t"), P(F, "t"));
  EXPECT_EQ(qr.quot, P(F, "t + 1"));
  EXPECT_TRUE(qr.rem.is_zero());
  EXPECT_THROW(divmod(f, Poly(F)), DomainError);
}

TEST(Poly, GcdIsMonic) {
  // frozen: f3_gcd = t + 2
  auto F3 = make_field(3);
  const Poly g = gcd(P(F3, "t^2 - 1"), P(F3, "t - 1"));
  EXPECT_EQ(g, P(F3, "t + 2"));
  EXPECT_TRUE(g.is_monic());
}

TEST(Poly, DivmodReconstructionFuzz) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    auto F = i % 3 == 0 ? make_field(2) : i % 3 == 1 ? make_field(3) : make_field(2, 2);
    const Poly f = support::random_poly(F, 1 + rng() % 12, rng);
    Poly g = support::random_poly(F, 1 + rng() % 6, rng);
    if (g.is_zero()) g = Poly::constant(F, 1);
    const DivMod qr = divmod(f, g);
    EXPECT_EQ(qr.quot * g + qr.rem, f);
    EXPECT_LT(qr.rem.degree(), g.degree());
  }
}

TEST(Poly, ExtGcdAndModPow) {
  std::mt19937_64 rng(12);
  auto F = make_field(5);
  for (int i = 0; i < 200; ++i) {
    const Poly a = support::random_poly(F, 6, rng), b = support::random_poly(F, 5, rng);
    if (a.is_zero() && b.is_zero()) continue;
    const ExtGcd e = ext_gcd(a, b);
    EXPECT_EQ(e.s * a + e.t * b, e.g);
    EXPECT_EQ(e.g, gcd(a, b));
    const Poly m = support::random_monic(F, 3, rng);
    EXPECT_EQ(mod_pow(a, 7, m), pow(a, 7) % m);
  }
}

TEST(Poly, Crt) {
  auto F = make_field(3);
  const Poly m1 = P(F, "t"), m2 = P(F, "t^2 + 1");
  const Poly x = crt({{P(F, "2"), m1}, {P(F, "t"), m2}});
  EXPECT_EQ(x % m1, P(F, "2"));
  EXPECT_EQ(x % m2, P(F, "t"));
  EXPECT_LT(x.degree(), Ord(3));
}

TEST(Poly, IndexRoundTrip) {
  auto F = make_field(3);
  for (std::uint64_t i = 0; i < 81; ++i) EXPECT_EQ(Poly::from_index(F, i).index(), i);
  EXPECT_EQ(Poly::from_index(F, 5), P(F, "t + 2"));
}

TEST(Enumerate, GN) {
  auto F2 = make_field(2);
  EXPECT_EQ(enumerate_GN(F2, 0).size(), 1u);
  EXPECT_TRUE(enumerate_GN(F2, 0)[0].is_zero());
  const auto G2 = enumerate_GN(F2, 2);
  ASSERT_EQ(G2.size(), 4u);
  EXPECT_EQ(G2[1], P(F2, "1"));
  EXPECT_EQ(G2[2], P(F2, "t"));
  EXPECT_EQ(G2[3], P(F2, "t + 1"));
  EXPECT_EQ(enumerate_GN(make_field(3), 1).size(), 3u);
  for (auto F : {make_field(2), make_field(3), make_field(2, 2)}) {
    const auto G = enumerate_GN(F, 4);
    std::set<std::vector<Elem>> seen;
    for (const auto& x : G) {
      EXPECT_LT(x.degree(), Ord(4));
      seen.insert(x.coeffs());
    }
    EXPECT_EQ(seen.size(), G.size());
    EXPECT_EQ(G.size(), F->q() * F->q() * F->q() * F->q());
  }
  EXPECT_THROW(enumerate_GN(F2, 30, 1 << 20), BudgetError);
}

TEST(Enumerate, Irreducibles) {
  auto F2 = make_field(2);
  const auto I1 = irreducibles(F2, 1);
  ASSERT_EQ(I1.size(), 2u);
  EXPECT_EQ(I1[0], P(F2, "t"));
  EXPECT_EQ(I1[1], P(F2, "t + 1"));
  const auto I2 = irreducibles(F2, 2);
  ASSERT_EQ(I2.size(), 1u);
  EXPECT_EQ(I2[0], P(F2, "t^2 + t + 1"));
  EXPECT_EQ(irreducibles(make_field(3), 2).size(), 3u);
  // frozen: irreducible_counts
  EXPECT_EQ(irreducibles(F2, 4).size(), 3u);
  EXPECT_EQ(irreducibles(make_field(3), 4).size(), 18u);
  EXPECT_EQ(irreducibles(make_field(5), 3).size(), 40u);
}

TEST(Enumerate, IrreducibleLowerBound) {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    auto F = q == 4 ? make_field(2, 2) : make_field(q);
    for (unsigned M = 1; M <= (q <= 3 ? 6u : 4u); ++M) {
      const auto I = irreducibles(F, M);
      double qm = 1;
      for (unsigned i = 0; i < M; ++i) qm *= q;
      EXPECT_GE(static_cast<double>(I.size()), qm / (2.0 * M)) << "q=" << q << " M=" << M;
      for (const auto& f : I) {
        EXPECT_TRUE(f.is_monic());
        EXPECT_EQ(f.degree(), Ord(M));
      }
    }
  }
}

TEST(Enumerate, FactorTrial) {
  auto F = make_field(2);
  const auto fs = factor_trial(P(F, "t^4 + t^2"));  // t^2 (t+1)^2
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_EQ(fs[0].prime, P(F, "t"));
  EXPECT_EQ(fs[0].exponent, 2u);
  EXPECT_EQ(fs[1].prime, P(F, "t + 1"));
  EXPECT_EQ(fs[1].exponent, 2u);
}

TEST(RootsMod, Examples) {
  auto F2 = make_field(2);
  UPoly u(F2);
  u.set(1, Poly::constant(F2, 1));
  auto r = roots_mod(u, P(F2, "t^2 + 1"));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_TRUE(r[0].is_zero());

  UPoly sq(F2);
  sq.set(2, Poly::constant(F2, 1));
  r = roots_mod(sq, P(F2, "t"));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_TRUE(r[0].is_zero());

  // frozen: f2_roots_u2u_mod_t1
  UPoly uu(F2);
  uu.set(2, Poly::constant(F2, 1));
  uu.set(1, Poly::constant(F2, 1));
  r = roots_mod(uu, P(F2, "t + 1"));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0], P(F2, "0"));
  EXPECT_EQ(r[1], P(F2, "1"));

  EXPECT_THROW(roots_mod(uu, Poly(F2)), DomainError);
}
