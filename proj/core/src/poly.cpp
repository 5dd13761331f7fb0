#include "fqlab/poly.hpp"

#include <algorithm>
#include <sstream>

#include "fqlab/errors.hpp"

namespace fqlab {

Poly::Poly(FieldPtr field) : field_(std::move(field)) {}

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (Elem c : c_)
    if (c >= field_->q()) throw DomainError("coefficient outside F_q");
  trim();
}

Poly Poly::constant(FieldPtr field, Elem c) { return Poly(std::move(field), std::vector<Elem>{c}); }

Poly Poly::monomial(FieldPtr field, Elem c, unsigned k) {
  std::vector<Elem> v(k + 1, 0);
  v[k] = c;
  return Poly(std::move(field), std::move(v));
}

Poly Poly::t_pow(FieldPtr field, unsigned k) { return monomial(std::move(field), 1, k); }

Poly Poly::from_index(FieldPtr field, std::uint64_t index) {
  const unsigned q = field->q();
  std::vector<Elem> v;
  while (index) {
    v.push_back(static_cast<Elem>(index % q));
    index /= q;
  }
  Poly r(std::move(field));
  r.c_ = std::move(v);
  return r;
}

std::uint64_t Poly::index() const {
  std::uint64_t v = 0;
  for (std::size_t i = c_.size(); i-- > 0;) v = v * field_->q() + c_[i];
  return v;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return scaled(field_->inv(c_.back()));
}

Poly Poly::scaled(Elem c) const {
  Poly r(field_);
  if (c == 0) return r;
  r.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = field_->mul(c_[i], c);
  return r;
}

Poly Poly::shifted(unsigned k) const {
  Poly r(field_);
  if (c_.empty()) return r;
  r.c_.assign(k, 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->add(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(a.field_);
  if (a.c_.empty() || b.c_.empty()) return r;
  const Field& F = *a.field_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    const Elem ai = a.c_[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      r.c_[i + j] = F.add(r.c_[i + j], F.mul(ai, b.c_[j]));
  }
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r(field_);
  r.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = field_->neg(c_[i]);
  return r;
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (std::size_t i = a.c_.size(); i-- > 0;)
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  return false;
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  const Field& F = *field_;
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c_[i] == 1;
    if (i == 0) {
      os << F.elem_string(c_[i]);
      continue;
    }
    if (!unit) os << F.elem_string(c_[i]) << "*";
    os << "t";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

DivMod divmod(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw DomainError("polynomial division by zero");
  const Field& F = g.f();
  std::vector<Elem> rem = f.coeffs();
  const std::vector<Elem>& gc = g.coeffs();
  if (rem.size() < gc.size()) return {Poly(g.field()), f};
  std::vector<Elem> quot(rem.size() - gc.size() + 1, 0);
  const Elem lead_inv = F.inv(gc.back());
  for (std::size_t k = rem.size() - 1;; --k) {
    const Elem c = F.mul(rem[k], lead_inv);
    if (c != 0) {
      const std::size_t shift = k + 1 - gc.size();
      quot[shift] = c;
      for (std::size_t i = 0; i < gc.size(); ++i)
        rem[shift + i] = F.sub(rem[shift + i], F.mul(c, gc[i]));
    }
    if (k == gc.size() - 1) break;
  }
  rem.resize(gc.size() - 1);
  return {Poly(g.field(), std::move(quot)), Poly(g.field(), std::move(rem))};
}

Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).rem; }
Poly operator/(const Poly& f, const Poly& g) { return divmod(f, g).quot; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
  const FieldPtr& F = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(F, 1), s1(F);
  Poly t0(F), t1 = Poly::constant(F, 1);
  while (!r1.is_zero()) {
    DivMod qr = divmod(r0, r1);
    Poly s2 = s0 - qr.quot * s1;
    Poly t2 = t0 - qr.quot * t1;
    r0 = std::move(r1);
    r1 = std::move(qr.rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Elem li = a.f().inv(r0.lead());
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

Poly pow(const Poly& base, std::uint64_t e) {
  Poly r = Poly::constant(base.field(), 1), b = base;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Poly mod_pow(const Poly& base, std::uint64_t e, const Poly& m) {
  if (m.is_zero()) throw DomainError("mod_pow with zero modulus");
  Poly r = Poly::constant(base.field(), 1) % m, b = base % m;
  while (e) {
    if (e & 1) r = (r * b) % m;
    e >>= 1;
    if (e) b = (b * b) % m;
  }
  return r;
}

Poly mod_inverse(const Poly& a, const Poly& m) {
  if (m.is_zero()) throw DomainError("mod_inverse with zero modulus");
  ExtGcd eg = ext_gcd(a % m, m);
  if (eg.g.degree() != Ord(0)) throw DomainError("polynomial not invertible modulo m");
  return eg.s % m;
}

Poly crt(const std::vector<std::pair<Poly, Poly>>& rm) {
  if (rm.empty()) throw DomainError("crt with no congruences");
  Poly x = rm.front().first % rm.front().second;
  Poly modulus = rm.front().second;
  for (std::size_t i = 1; i < rm.size(); ++i) {
    const auto& [r, m] = rm[i];
    // x + modulus * k = r (mod m)
    const Poly inv = mod_inverse(modulus, m);
    const Poly k = ((r - x) * inv) % m;
    x = x + modulus * k;
    modulus = modulus * m;
    x = x % modulus;
  }
  return x;
}

}  // namespace fqlab
