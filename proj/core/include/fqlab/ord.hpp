#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "fqlab/errors.hpp"

namespace fqlab {

/// Degree of a polynomial or order of a Laurent series: an integer or -infinity.
/// The zero element has Ord::neg_inf(); no integer value stands in for it.
class Ord {
 public:
  constexpr Ord(long v) : v_(v), neg_inf_(false) {}  // NOLINT(google-explicit-constructor)

  static constexpr Ord neg_inf() { return Ord(); }

  constexpr bool is_neg_inf() const { return neg_inf_; }

  long value() const {
    if (neg_inf_) throw DomainError("Ord: value() of -infinity");
    return v_;
  }

  friend constexpr bool operator==(Ord a, Ord b) {
    return a.neg_inf_ == b.neg_inf_ && (a.neg_inf_ || a.v_ == b.v_);
  }
  friend constexpr std::strong_ordering operator<=>(Ord a, Ord b) {
    if (a.neg_inf_ || b.neg_inf_) return b.neg_inf_ <=> a.neg_inf_;
    return a.v_ <=> b.v_;
  }
  friend constexpr Ord operator+(Ord a, Ord b) {
    if (a.neg_inf_ || b.neg_inf_) return neg_inf();
    return Ord(a.v_ + b.v_);
  }
  friend constexpr Ord operator-(Ord a, long b) {
    if (a.neg_inf_) return neg_inf();
    return Ord(a.v_ - b);
  }

  std::string str() const { return neg_inf_ ? std::string("-inf") : std::to_string(v_); }

 private:
  constexpr Ord() : v_(0), neg_inf_(true) {}
  long v_;
  bool neg_inf_;
};

}  // namespace fqlab
