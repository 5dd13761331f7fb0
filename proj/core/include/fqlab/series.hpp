#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fqlab/poly.hpp"

namespace fqlab {

/// Truncated Laurent series sum_{e >= floor} c_e t^e in F_q((1/t)).
/// Digits below the floor are unknown; reading one throws PrecisionError.
class Series {
 public:
  /// The series known to be zero at every exponent >= floor.
  Series(FieldPtr field, long floor);
  /// digits[i] is the coefficient of t^{floor + i}.
  Series(FieldPtr field, long floor, std::vector<Elem> digits);

  const FieldPtr& field() const { return field_; }
  long floor() const { return floor_; }

  /// True when every known digit is zero.
  bool known_zero() const { return d_.empty(); }
  /// Highest nonzero known exponent, or -inf when known_zero().
  Ord top() const;
  /// ord of the series; throws PrecisionError when known_zero().
  long ord() const;
  /// An upper bound on the true ord: top() if nonzero, floor - 1 otherwise.
  long ord_bound() const { return d_.empty() ? floor_ - 1 : floor_ + static_cast<long>(d_.size()) - 1; }

  /// Coefficient of t^e; throws PrecisionError for e < floor.
  Elem coeff(long e) const;
  /// Same series with the floor raised to new_floor (digits below dropped).
  /// new_floor below the current floor throws PrecisionError.
  Series truncated(long new_floor) const;

  /// Polynomial part (exponents >= 0); requires floor <= 0.
  Poly poly_part() const;
  /// Fractional part (exponents < 0), same floor.
  Series frac_part() const;

  Series operator-() const;
  Series scaled(Elem c) const;
  /// Multiplication by t^k (shifts exponents and the floor).
  Series shifted(long k) const;

  /// Exact digit-and-floor equality.
  friend bool operator==(const Series& a, const Series& b) {
    return a.floor_ == b.floor_ && a.d_ == b.d_;
  }

  /// "t^2 + 1 + 2*t^-1 + O(t^-12)", the O-term covering floor - 1 and below.
  std::string str() const;

 private:
  void trim();
  FieldPtr field_;
  long floor_;
  std::vector<Elem> d_;  // d_[i] = coefficient of t^{floor_ + i}, no trailing zeros
};

/// Precision-tracked sum: floor = max of floors.
Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
/// Precision-tracked product; the floor is the lowest exponent the unknown
/// tails of either factor cannot reach.
Series mul(const Series& a, const Series& b);
/// 1/a with floor = floor(a) - 2 ord(a); throws PrecisionError if a is known zero.
Series inverse(const Series& a);

}  // namespace fqlab
