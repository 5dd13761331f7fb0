#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fqlab/field.hpp"
#include "fqlab/ord.hpp"

namespace fqlab {

/// Element of F_q[t]. Coefficients are stored low to high with no trailing
/// zeros, so the zero polynomial has an empty coefficient vector and degree -inf.
class Poly {
 public:
  explicit Poly(FieldPtr field);
  Poly(FieldPtr field, std::vector<Elem> coeffs);

  static Poly constant(FieldPtr field, Elem c);
  static Poly monomial(FieldPtr field, Elem c, unsigned k);
  /// t^k.
  static Poly t_pow(FieldPtr field, unsigned k);
  /// The polynomial whose base-q digit expansion of `index` gives its
  /// coefficients, constant term least significant.
  static Poly from_index(FieldPtr field, std::uint64_t index);

  const FieldPtr& field() const { return field_; }
  const Field& f() const { return *field_; }
  const std::vector<Elem>& coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  Ord degree() const { return c_.empty() ? Ord::neg_inf() : Ord(static_cast<long>(c_.size()) - 1); }
  /// Number of stored coefficients (degree + 1, or 0 for the zero polynomial).
  std::size_t size() const { return c_.size(); }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Elem{0}; }
  Elem lead() const { return c_.empty() ? Elem{0} : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  /// Inverse of from_index; only meaningful while q^(deg+1) fits in 64 bits.
  std::uint64_t index() const;

  Poly monic() const;
  Poly scaled(Elem c) const;
  Poly shifted(unsigned k) const;  // multiply by t^k

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  /// Total order: by degree, then coefficients from the top down.
  friend bool operator<(const Poly& a, const Poly& b);

  std::string str() const;

 private:
  void trim();
  FieldPtr field_;
  std::vector<Elem> c_;
};

struct DivMod {
  Poly quot;
  Poly rem;
};

/// f = quot * g + rem with deg rem < deg g. Throws DomainError when g = 0.
DivMod divmod(const Poly& f, const Poly& g);
Poly operator%(const Poly& f, const Poly& g);
Poly operator/(const Poly& f, const Poly& g);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

struct ExtGcd {
  Poly g;  // monic gcd
  Poly s;
  Poly t;  // s*a + t*b = g
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);

Poly pow(const Poly& base, std::uint64_t e);
/// base^e mod m; m nonzero.
Poly mod_pow(const Poly& base, std::uint64_t e, const Poly& m);
/// Inverse of a modulo m; throws DomainError when gcd(a, m) != 1.
Poly mod_inverse(const Poly& a, const Poly& m);

/// Solves x = r_i (mod m_i) for pairwise coprime moduli; result reduced mod prod m_i.
Poly crt(const std::vector<std::pair<Poly, Poly>>& residues_and_moduli);

}  // namespace fqlab
