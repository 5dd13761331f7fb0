#include "fqlab/series.hpp"

#include <algorithm>
#include <sstream>

#include "fqlab/errors.hpp"

namespace fqlab {

Series::Series(FieldPtr field, long floor) : field_(std::move(field)), floor_(floor) {}

Series::Series(FieldPtr field, long floor, std::vector<Elem> digits)
    : field_(std::move(field)), floor_(floor), d_(std::move(digits)) {
  for (Elem c : d_)
    if (c >= field_->q()) throw DomainError("series digit outside F_q");
  trim();
}

void Series::trim() {
  while (!d_.empty() && d_.back() == 0) d_.pop_back();
}

Ord Series::top() const {
  if (d_.empty()) return Ord::neg_inf();
  return Ord(floor_ + static_cast<long>(d_.size()) - 1);
}

long Series::ord() const {
  if (d_.empty())
    throw PrecisionError("series is zero down to its floor t^" + std::to_string(floor_) +
                         "; leading term not certified");
  return floor_ + static_cast<long>(d_.size()) - 1;
}

Elem Series::coeff(long e) const {
  if (e < floor_)
    throw PrecisionError("digit t^" + std::to_string(e) + " lies below the precision floor t^" +
                         std::to_string(floor_));
  const long i = e - floor_;
  return i < static_cast<long>(d_.size()) ? d_[static_cast<std::size_t>(i)] : Elem{0};
}

Series Series::truncated(long new_floor) const {
  if (new_floor < floor_)
    throw PrecisionError("cannot lower a series floor from " + std::to_string(floor_) + " to " +
                         std::to_string(new_floor));
  const long drop = new_floor - floor_;
  if (drop >= static_cast<long>(d_.size())) return Series(field_, new_floor);
  return Series(field_, new_floor, std::vector<Elem>(d_.begin() + drop, d_.end()));
}

Poly Series::poly_part() const {
  if (floor_ > 0)
    throw PrecisionError("polynomial part needs digits down to t^0, floor is t^" + std::to_string(floor_));
  std::vector<Elem> c;
  for (long e = 0; e <= ord_bound(); ++e) c.push_back(coeff(e));
  return Poly(field_, std::move(c));
}

Series Series::frac_part() const {
  if (floor_ >= 0) return Series(field_, floor_);
  std::vector<Elem> c;
  for (long e = floor_; e < 0 && e <= ord_bound(); ++e) c.push_back(coeff(e));
  return Series(field_, floor_, std::move(c));
}

Series Series::operator-() const {
  Series r = *this;
  for (Elem& c : r.d_) c = field_->neg(c);
  return r;
}

Series Series::scaled(Elem c) const {
  if (c == 0) return Series(field_, floor_);
  Series r = *this;
  for (Elem& x : r.d_) x = field_->mul(x, c);
  return r;
}

Series Series::shifted(long k) const {
  Series r = *this;
  r.floor_ += k;
  return r;
}

std::string Series::str() const {
  const Field& F = *field_;
  std::ostringstream os;
  bool first = true;
  for (long i = static_cast<long>(d_.size()) - 1; i >= 0; --i) {
    const Elem c = d_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const long e = floor_ + i;
    if (!first) os << " + ";
    first = false;
    if (e == 0) {
      os << F.elem_string(c);
      continue;
    }
    if (c != 1) os << F.elem_string(c) << "*";
    os << "t";
    if (e != 1) os << "^" << e;
  }
  if (!first) os << " + ";
  os << "O(t^" << (floor_ - 1) << ")";
  return os.str();
}

namespace {

Series combine(const Series& a, const Series& b, bool subtract) {
  const Field& F = *a.field();
  const long lo = std::max(a.floor(), b.floor());
  const long hi = std::max(a.ord_bound(), b.ord_bound());
  std::vector<Elem> d;
  if (hi >= lo) {
    d.resize(static_cast<std::size_t>(hi - lo + 1));
    for (long e = lo; e <= hi; ++e) {
      const Elem x = a.coeff(e), y = b.coeff(e);
      d[static_cast<std::size_t>(e - lo)] = subtract ? F.sub(x, y) : F.add(x, y);
    }
  }
  return Series(a.field(), lo, std::move(d));
}

}  // namespace

Series add(const Series& a, const Series& b) { return combine(a, b, false); }
Series sub(const Series& a, const Series& b) { return combine(a, b, true); }

Series mul(const Series& a, const Series& b) {
  // a = A + ea with ord ea < floor(a); likewise b. The error terms A*eb, ea*B
  // and ea*eb all sit below out_floor.
  const long fa = a.floor(), fb = b.floor();
  long out_floor = fa + fb - 1;
  if (!a.known_zero()) out_floor = std::max(out_floor, a.ord() + fb);
  if (!b.known_zero()) out_floor = std::max(out_floor, fa + b.ord());
  if (a.known_zero() || b.known_zero()) return Series(a.field(), out_floor);

  const Field& F = *a.field();
  const long top = a.ord() + b.ord();
  if (top < out_floor) return Series(a.field(), out_floor);
  std::vector<Elem> d(static_cast<std::size_t>(top - out_floor + 1), 0);
  for (long i = fa; i <= a.ord(); ++i) {
    const Elem ai = a.coeff(i);
    if (ai == 0) continue;
    // need j with i + j >= out_floor and fb <= j <= ord b
    const long jlo = std::max(fb, out_floor - i);
    for (long j = jlo; j <= b.ord(); ++j) {
      const Elem bj = b.coeff(j);
      if (bj == 0) continue;
      auto& slot = d[static_cast<std::size_t>(i + j - out_floor)];
      slot = F.add(slot, F.mul(ai, bj));
    }
  }
  return Series(a.field(), out_floor, std::move(d));
}

Series inverse(const Series& a) {
  const long n = a.ord();  // throws when the leading digit is not certified
  const long out_floor = a.floor() - 2 * n;
  const Field& F = *a.field();
  // a = t^n (c_0 + c_1 t^-1 + ...), 1/a = t^-n (d_0 + d_1 t^-1 + ...)
  const long terms = -n - out_floor + 1;  // d_0 .. d_{terms-1}
  std::vector<Elem> c(static_cast<std::size_t>(terms));
  for (long i = 0; i < terms; ++i) c[static_cast<std::size_t>(i)] = a.coeff(n - i);
  std::vector<Elem> inv(static_cast<std::size_t>(terms));
  const Elem c0inv = F.inv(c[0]);
  inv[0] = c0inv;
  for (long j = 1; j < terms; ++j) {
    Elem s = 0;
    for (long i = 1; i <= j; ++i)
      s = F.add(s, F.mul(c[static_cast<std::size_t>(i)], inv[static_cast<std::size_t>(j - i)]));
    inv[static_cast<std::size_t>(j)] = F.neg(F.mul(c0inv, s));
  }
  // inv[j] is the coefficient of t^{-n-j}; store ascending from out_floor.
  std::vector<Elem> d(static_cast<std::size_t>(terms));
  for (long j = 0; j < terms; ++j) d[static_cast<std::size_t>(terms - 1 - j)] = inv[static_cast<std::size_t>(j)];
  return Series(a.field(), out_floor, std::move(d));
}

}  // namespace fqlab
