#include "fqlab/kelem.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fqlab/errors.hpp"

namespace fqlab {

// ---------------------------------------------------------------- Rational

Rational::Rational(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.field(), 1);
    return;
  }
  const Poly g = gcd(num_, den_);
  if (g.degree() > Ord(0)) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  const Elem li = num_.f().inv(den_.lead());
  num_ = num_.scaled(li);
  den_ = den_.scaled(li);
}

Rational::Rational(Poly p) : num_(std::move(p)), den_(Poly::constant(num_.field(), 1)) {}

Series Rational::expand(long floor) const {
  const FieldPtr& F = num_.field();
  if (num_.is_zero()) return Series(F, floor);
  // num * t^s / den = Q + R/den with s = max(0, -floor); the digit of t^e in
  // num/den for e >= floor is the coefficient of t^{e+s} in Q.
  const long s = std::max(0L, -floor);
  const DivMod qr = divmod(num_.shifted(static_cast<unsigned>(s)), den_);
  const long top = ord().value();
  if (top < floor) return Series(F, floor);
  std::vector<Elem> d(static_cast<std::size_t>(top - floor + 1));
  for (long e = floor; e <= top; ++e) d[static_cast<std::size_t>(e - floor)] = qr.quot.coeff(static_cast<std::size_t>(e + s));
  return Series(F, floor, std::move(d));
}

std::string Rational::str() const {
  if (den_.degree() == Ord(0)) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}
Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num() * b.den() - b.num() * a.den(), a.den() * b.den());
}
Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num() * b.num(), a.den() * b.den());
}
Rational operator-(const Rational& a) { return Rational(-a.num(), a.den()); }
Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DomainError("rational division by zero");
  return Rational(a.num() * b.den(), a.den() * b.num());
}

// ---------------------------------------------------------------- KElem

const FieldPtr& KElem::field() const {
  return std::visit([](const auto& x) -> const FieldPtr& { return x.field(); }, v_);
}

std::optional<long> KElem::floor() const {
  if (is_exact()) return std::nullopt;
  return series().floor();
}

Ord KElem::ord() const {
  if (is_exact()) return rational().ord();
  return Ord(series().ord());
}

double KElem::norm() const {
  const Ord o = ord();
  if (o.is_neg_inf()) return 0.0;
  return std::pow(static_cast<double>(field()->q()), static_cast<double>(o.value()));
}

Elem KElem::digit(long e) const {
  if (is_exact()) {
    const Rational& r = rational();
    if (r.is_zero() || Ord(e) > r.ord()) return 0;
    return r.expand(e).coeff(e);
  }
  return series().coeff(e);
}

std::vector<Elem> KElem::frac_digits(std::size_t count) const {
  std::vector<Elem> out(count, 0);
  if (count == 0) return out;
  const long lowest = -static_cast<long>(count);
  if (is_exact()) {
    const Rational fr = rational().frac_part();
    if (fr.is_zero()) return out;
    const Series s = fr.expand(lowest);
    for (std::size_t i = 0; i < count; ++i) out[i] = s.coeff(-1 - static_cast<long>(i));
    return out;
  }
  const Series& s = series();
  if (s.floor() > lowest)
    throw PrecisionError("need fractional digits down to t^" + std::to_string(lowest) +
                         ", series floor is t^" + std::to_string(s.floor()));
  for (std::size_t i = 0; i < count; ++i) out[i] = s.coeff(-1 - static_cast<long>(i));
  return out;
}

KElem KElem::frac() const {
  if (is_exact()) return rational().frac_part();
  const Series& s = series();
  if (s.floor() > -1)
    throw PrecisionError("fractional part needs digits down to t^-1, floor is t^" + std::to_string(s.floor()));
  return s.frac_part();
}

Elem KElem::residue() const {
  if (is_exact()) return frac_digits(1)[0];
  return series().coeff(-1);
}

Series KElem::to_series(long floor) const {
  if (is_exact()) return rational().expand(floor);
  return series().truncated(floor);
}

std::string KElem::str() const {
  return std::visit([](const auto& x) { return x.str(); }, v_);
}

namespace {

// R * S with R exact and nonzero.
Series mul_exact_series(const Rational& r, const Series& s) {
  const long ord_r = r.ord().value();
  if (s.known_zero()) return Series(s.field(), s.floor() + ord_r);
  const long out_floor = ord_r + s.floor();
  const Series re = r.expand(out_floor - s.ord());
  return mul(re, s).truncated(out_floor);
}

}  // namespace

KElem operator+(const KElem& a, const KElem& b) {
  if (a.is_exact() && b.is_exact()) return a.rational() + b.rational();
  if (a.is_exact()) return add(a.to_series(b.series().floor()), b.series());
  if (b.is_exact()) return add(a.series(), b.to_series(a.series().floor()));
  return add(a.series(), b.series());
}

KElem operator-(const KElem& a) {
  if (a.is_exact()) return -a.rational();
  return -a.series();
}

KElem operator-(const KElem& a, const KElem& b) { return a + (-b); }

KElem operator*(const KElem& a, const KElem& b) {
  if (a.is_exact() && b.is_exact()) return a.rational() * b.rational();
  if (a.is_exact_zero() || b.is_exact_zero()) return KElem::zero(a.field());
  if (a.is_exact()) return mul_exact_series(a.rational(), b.series());
  if (b.is_exact()) return mul_exact_series(b.rational(), a.series());
  return mul(a.series(), b.series());
}

KElem operator*(const Poly& m, const KElem& a) { return KElem::poly(m) * a; }

KElem scale(const KElem& a, Elem c) {
  if (a.is_exact()) return Rational(a.rational().num().scaled(c), a.rational().den());
  return a.series().scaled(c);
}

KElem inverse(const KElem& a) {
  if (a.is_exact()) return Rational(Poly::constant(a.field(), 1)) / a.rational();
  return inverse(a.series());
}

FracOrd frac_ord(const KElem& a, long threshold) {
  FracOrd out;
  if (a.is_exact()) {
    const Rational fr = a.rational().frac_part();
    out.ord = fr.ord();
    out.below_threshold = out.ord < Ord(threshold);
    return out;
  }
  const Series& s = a.series();
  const long stop = std::min(threshold, -1L);
  for (long e = -1; e >= stop; --e) {
    if (e < s.floor())
      throw PrecisionError("cannot certify ord of fractional part: floor t^" + std::to_string(s.floor()) +
                           " above t^" + std::to_string(stop));
    if (s.coeff(e) != 0) {
      out.ord = Ord(e);
      out.below_threshold = e < threshold;
      return out;
    }
  }
  out.below_threshold = true;
  return out;
}

// ---------------------------------------------------------------- T map

namespace {

// Output floor of one T step on a series with floor f.
long tmap_natural_floor(unsigned p, long f) {
  if (f > -1) return 0;
  const long jmax = (-f - 1) / static_cast<long>(p);
  return -(jmax + 1);
}

Series tmap_once(const Series& s, long out_floor) {
  const unsigned p = s.field()->p();
  std::vector<Elem> d;
  if (out_floor <= -1) {
    d.resize(static_cast<std::size_t>(-out_floor));
    // output digit at -(j+1) reads input digit at -(j p + 1)
    for (long j = 0; j < -out_floor; ++j) {
      const long src = -(j * static_cast<long>(p) + 1);
      d[static_cast<std::size_t>(-out_floor - 1 - j)] = s.coeff(src);
    }
  }
  return Series(s.field(), out_floor, std::move(d));
}

}  // namespace

long tmap_input_floor(unsigned p, unsigned v, long out_floor) {
  long f = out_floor;
  for (unsigned i = 0; i < v; ++i) {
    if (f > -1) return f;  // nothing below t^0 is read
    f = -((-f - 1) * static_cast<long>(p) + 1);
  }
  return f;
}

Series tmap(const KElem& alpha, unsigned v, std::optional<long> out_floor) {
  const unsigned p = alpha.field()->p();
  Series cur(alpha.field(), 0);
  if (alpha.is_exact()) {
    if (!out_floor) throw PrecisionError("tmap of an exact rational needs an explicit output floor");
    cur = alpha.rational().expand(std::min(tmap_input_floor(p, v, *out_floor), -1L));
  } else {
    cur = alpha.series();
  }
  if (v == 0) {
    if (out_floor) return cur.truncated(*out_floor);
    return cur;
  }
  for (unsigned i = 0; i < v; ++i) cur = tmap_once(cur, tmap_natural_floor(p, cur.floor()));
  if (out_floor) {
    if (*out_floor < cur.floor())
      throw PrecisionError("T^" + std::to_string(v) + " is only certified down to t^" +
                           std::to_string(cur.floor()) + ", requested t^" + std::to_string(*out_floor));
    return cur.truncated(*out_floor);
  }
  return cur;
}

Series kernel_element(const FieldPtr& field, long floor, std::uint64_t seed) {
  if (floor > -2) throw DomainError("kernel_element needs floor <= -2");
  std::mt19937_64 rng(seed);
  const unsigned p = field->p(), q = field->q();
  std::vector<Elem> d(static_cast<std::size_t>(-floor));
  for (long e = -1; e >= floor; --e) {
    const Elem draw = static_cast<Elem>(rng() % q);
    const bool sampled = ((-e - 1) % static_cast<long>(p)) == 0;  // e = -(j p + 1)
    d[static_cast<std::size_t>(e - floor)] = sampled ? Elem{0} : draw;
  }
  return Series(field, floor, std::move(d));
}

Series random_series(const FieldPtr& field, long floor, std::uint64_t seed) {
  if (floor > -1) throw DomainError("random_series needs floor <= -1");
  std::mt19937_64 rng(seed);
  const unsigned q = field->q();
  std::vector<Elem> d(static_cast<std::size_t>(-floor));
  for (long e = -1; e >= floor; --e) d[static_cast<std::size_t>(e - floor)] = static_cast<Elem>(rng() % q);
  return Series(field, floor, std::move(d));
}

}  // namespace fqlab
