#include "fqlab/contfrac.hpp"

#include "fqlab/errors.hpp"

namespace fqlab {

CFExpansion cf_expand(const KElem& alpha, std::size_t max_terms) {
  CFExpansion cf;
  const FieldPtr& F = alpha.field();
  if (alpha.is_exact()) {
    Rational x = alpha.rational();
    while (cf.quotients.size() < max_terms) {
      cf.quotients.push_back(x.poly_part());
      const Rational fr = x.frac_part();
      if (fr.is_zero()) {
        cf.complete = true;
        break;
      }
      x = Rational(Poly::constant(F, 1)) / fr;
    }
    return cf;
  }
  Series x = alpha.series();
  while (cf.quotients.size() < max_terms) {
    if (x.floor() > 0) {
      cf.exhausted = true;
      break;
    }
    cf.quotients.push_back(x.poly_part());
    const Series fr = x.frac_part();
    if (fr.known_zero()) {
      // the tail might be zero or might start below the floor
      cf.exhausted = true;
      break;
    }
    x = inverse(fr);
  }
  return cf;
}

std::vector<Convergent> convergents(const CFExpansion& cf) {
  std::vector<Convergent> out;
  if (cf.quotients.empty()) return out;
  const FieldPtr& F = cf.quotients.front().field();
  Poly a2(F), g2 = Poly::constant(F, 1);
  Poly a1 = Poly::constant(F, 1), g1(F);
  for (const Poly& b : cf.quotients) {
    Poly a = b * a1 + a2, g = b * g1 + g2;
    out.push_back({a, g});
    a2 = std::move(a1);
    g2 = std::move(g1);
    a1 = std::move(a);
    g1 = std::move(g);
  }
  return out;
}

bool certify_ord_below(const KElem& x, long bound) {
  if (x.is_exact()) return x.ord() < Ord(bound);
  const Series& s = x.series();
  if (!s.known_zero()) {
    const long o = s.ord();
    if (o >= s.floor()) return o < bound;
  }
  if (s.floor() <= bound) return true;  // all digits at and above the floor vanish
  throw PrecisionError("cannot certify ord < " + std::to_string(bound) + " with floor t^" +
                       std::to_string(s.floor()));
}

namespace {

KElem residual(const KElem& alpha, const Poly& a, const Poly& g) {
  return g * alpha - KElem::poly(a);
}

Ord certified_ord(const KElem& x) {
  if (x.is_exact()) return x.ord();
  const Series& s = x.series();
  if (s.known_zero())
    throw PrecisionError("ord not certified: all digits down to t^" + std::to_string(s.floor()) + " vanish");
  return Ord(s.ord());
}

}  // namespace

Quality approx_quality(const KElem& alpha, const CFExpansion& cf, const std::vector<Convergent>& table,
                       std::size_t n) {
  if (n >= table.size()) throw DomainError("convergent index out of range");
  Quality out;
  if (n + 1 < table.size()) {
    out.predicted = Ord(-table[n + 1].g.degree().value());
  } else if (!cf.complete) {
    throw PrecisionError("convergent " + std::to_string(n + 1) + " is not available");
  }
  out.quality = certified_ord(residual(alpha, table[n].a, table[n].g));
  return out;
}

LegendreResult legendre_recover(const KElem& alpha, const Poly& a, const Poly& g, std::size_t max_terms) {
  if (g.is_zero()) throw DomainError("legendre_recover with g = 0");
  LegendreResult out;
  const long dg = g.degree().value();
  out.hypothesis = certify_ord_below(residual(alpha, a, g), -dg);
  if (!out.hypothesis) return out;
  const Rational target(a, g);
  const CFExpansion cf = cf_expand(alpha, max_terms);
  const auto table = convergents(cf);
  for (std::size_t n = 0; n < table.size(); ++n) {
    if (table[n].g.degree() > Ord(dg)) break;
    if (Rational(table[n].a, table[n].g) == target) {
      out.index = n;
      return out;
    }
  }
  if (!cf.complete && (table.empty() || table.back().g.degree() <= Ord(dg)))
    throw PrecisionError("expansion exhausted before reaching denominators of degree " + std::to_string(dg));
  return out;
}

Approximation dirichlet_approx_bound(const KElem& alpha, long B) {
  if (B < 0) throw DomainError("Dirichlet bound must be nonnegative");
  const CFExpansion cf = cf_expand(alpha, static_cast<std::size_t>(B) + 2);
  const auto table = convergents(cf);
  std::size_t n = 0;
  bool closed = false;  // convergent n+1 exists with ord g_{n+1} > B, or the expansion ended
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i].g.degree() > Ord(B)) {
      closed = true;
      break;
    }
    n = i;
  }
  if (!closed && !cf.complete)
    throw PrecisionError("continued fraction exhausted before a denominator of degree > " + std::to_string(B));
  Approximation out{table[n].a, table[n].g, Ord::neg_inf()};
  const KElem r = residual(alpha, out.a, out.g);
  if (!certify_ord_below(r, -B))
    throw HypothesisError("Dirichlet approximation failed the quality check");
  out.quality = r.is_exact() || !r.series().known_zero() ? certified_ord(r) : Ord(r.series().floor() - 1);
  return out;
}

Approximation dirichlet_approx(const KElem& alpha, unsigned k, unsigned M) {
  return dirichlet_approx_bound(alpha, static_cast<long>(k) * static_cast<long>(M));
}

bool RationalityReport::all_found() const {
  for (const auto& r : rows)
    if (!r.found) return false;
  return !rows.empty();
}

RationalityReport rationality_probe(const KElem& alpha, Kappa kappa, const std::vector<unsigned>& Ns) {
  if (kappa.den <= 0 || kappa.num <= kappa.den) throw DomainError("kappa must exceed 1");
  unsigned Nmax = 0;
  for (unsigned N : Ns) Nmax = std::max(Nmax, N);
  const CFExpansion cf = cf_expand(alpha, static_cast<std::size_t>(Nmax) + 2);
  const auto table = convergents(cf);
  RationalityReport rep;
  for (unsigned N : Ns) {
    ProbeRow row;
    row.N = N;
    // largest n with ord g_n < N; g_0 = 1 always qualifies when N >= 1
    std::optional<std::size_t> n;
    bool closed = false;
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table[i].g.degree() >= Ord(static_cast<long>(N))) {
        closed = true;
        break;
      }
      n = i;
    }
    if (!n) {
      rep.rows.push_back(row);
      continue;
    }
    if (!closed && !cf.complete)
      throw PrecisionError("continued fraction exhausted before denominators of degree " + std::to_string(N));
    // ord(g alpha - a) <= -kappa N  <=>  ord < -kappa N + 1 for an integer ord
    const long num = kappa.num * static_cast<long>(N);
    const long ceil_kn = (num + kappa.den - 1) / kappa.den;  // ceil(kappa N)
    const KElem r = residual(alpha, table[*n].a, table[*n].g);
    row.found = certify_ord_below(r, -ceil_kn + 1);
    Approximation ap{table[*n].a, table[*n].g, Ord::neg_inf()};
    if (r.is_exact() || !r.series().known_zero()) ap.quality = certified_ord(r);
    else ap.quality = Ord(r.series().floor() - 1);
    row.best = ap;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace fqlab
