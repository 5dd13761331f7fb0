#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fqlab/poly.hpp"
#include "fqlab/series.hpp"

namespace fqlab {

/// Exact element num/den of F_q(t), kept in lowest terms with monic denominator.
class Rational {
 public:
  Rational(Poly num, Poly den);
  /// The polynomial p/1.
  explicit Rational(Poly p);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const FieldPtr& field() const { return num_.field(); }

  bool is_zero() const { return num_.is_zero(); }
  Ord ord() const { return num_.degree().is_neg_inf() ? Ord::neg_inf() : Ord(num_.degree().value() - den_.degree().value()); }
  /// Polynomial part (num div den).
  Poly poly_part() const { return num_ / den_; }
  /// Fractional part (num mod den)/den.
  Rational frac_part() const { return Rational(num_ % den_, den_); }

  /// Digits of the 1/t expansion from ord down to floor, by long division.
  Series expand(long floor) const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "num / den", or just "num" when den = 1.
  std::string str() const;

 private:
  Poly num_, den_;
};

Rational operator+(const Rational& a, const Rational& b);
Rational operator-(const Rational& a, const Rational& b);
Rational operator*(const Rational& a, const Rational& b);
Rational operator-(const Rational& a);
/// Throws DomainError for a zero divisor.
Rational operator/(const Rational& a, const Rational& b);

/// Element of K_infinity: an exact rational or a truncated series.
class KElem {
 public:
  KElem(Rational r) : v_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  KElem(Series s) : v_(std::move(s)) {}    // NOLINT(google-explicit-constructor)

  static KElem zero(const FieldPtr& field) { return Rational(Poly(field)); }
  static KElem poly(const Poly& p) { return Rational(p); }

  const FieldPtr& field() const;
  bool is_exact() const { return std::holds_alternative<Rational>(v_); }
  const Rational& rational() const { return std::get<Rational>(v_); }
  const Series& series() const { return std::get<Series>(v_); }

  /// Precision floor; nullopt for exact values.
  std::optional<long> floor() const;
  /// Exactly zero (only possible for rationals).
  bool is_exact_zero() const { return is_exact() && rational().is_zero(); }

  /// ord, -inf for exact zero; PrecisionError if a series has no certified digit.
  Ord ord() const;
  /// |alpha| = q^ord as a double (0 for exact zero).
  double norm() const;

  /// Coefficient of t^e.
  Elem digit(long e) const;
  /// Digits of t^-1, t^-2, ..., t^-count (index 0 is the residue).
  std::vector<Elem> frac_digits(std::size_t count) const;

  /// Fractional part {alpha}; for series it keeps the floor and requires floor <= -1.
  KElem frac() const;
  /// res alpha = coefficient of t^-1.
  Elem residue() const;

  /// Series view with the given floor; rationals are expanded, series must
  /// already reach the floor and are truncated to it.
  Series to_series(long floor) const;

  std::string str() const;

 private:
  std::variant<Rational, Series> v_;
};

KElem operator+(const KElem& a, const KElem& b);
KElem operator-(const KElem& a, const KElem& b);
KElem operator*(const KElem& a, const KElem& b);
KElem operator-(const KElem& a);
KElem operator*(const Poly& m, const KElem& a);
KElem scale(const KElem& a, Elem c);
/// 1/a; DomainError for exact zero, PrecisionError for an uncertified series.
KElem inverse(const KElem& a);

/// ord of the fractional part, -inf when the fractional part is exactly zero.
/// For a series, throws PrecisionError unless a nonzero digit is found at or
/// above the floor, or the caller's `certify_below` threshold is met:
/// all digits in [certify_below, -1] zero proves ord{alpha} < certify_below.
struct FracOrd {
  bool below_threshold = false;  // every digit in [threshold, -1] is zero
  Ord ord = Ord::neg_inf();      // exact ord when !below_threshold
};
FracOrd frac_ord(const KElem& a, long threshold);

/// T(alpha) = a_{-1} t^-1 + a_{-p-1} t^-2 + a_{-2p-1} t^-3 + ..., composed v times.
/// With out_floor unset the widest certified floor is returned (series input
/// only); a requested floor that the input cannot support throws PrecisionError.
Series tmap(const KElem& alpha, unsigned v, std::optional<long> out_floor = std::nullopt);

/// Lowest input floor needed for T^v to be known down to out_floor.
long tmap_input_floor(unsigned p, unsigned v, long out_floor);

/// Seeded element of T with random digits in [floor, -1] except zeros at
/// -1, -p-1, -2p-1, ..., so that T(result) = 0 at this precision.
Series kernel_element(const FieldPtr& field, long floor, std::uint64_t seed);

/// Seeded element of T with uniformly random digits in [floor, -1].
Series random_series(const FieldPtr& field, long floor, std::uint64_t seed);

}  // namespace fqlab
