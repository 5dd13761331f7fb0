#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fqlab/exppoly.hpp"
#include "fqlab/options.hpp"

namespace fqlab {

/// Exponential sum sum e(.) over p-th roots of unity: counts[r] is the number
/// of terms equal to exp(2 pi i r / p).
struct CharSum {
  std::vector<std::uint64_t> counts;

  CharSum() = default;
  explicit CharSum(unsigned p) : counts(p, 0) {}

  unsigned p() const { return static_cast<unsigned>(counts.size()); }
  std::uint64_t total() const;
  /// The sum is exactly zero iff every count is equal (p prime).
  bool is_zero() const;
  /// Every term equals 1, so the sum equals total().
  bool is_full() const { return !counts.empty() && counts[0] == total(); }

  std::complex<double> value() const;
  double magnitude() const { return std::abs(value()); }
  /// magnitude() / total(), 0 for an empty sum.
  double normalized() const;

  void add(unsigned r, std::uint64_t n = 1) { counts[r] += n; }
  CharSum& operator+=(const CharSum& o);
  friend bool operator==(const CharSum& a, const CharSum& b) { return a.counts == b.counts; }

  std::string str() const;
};

/// e(alpha) as its residue r mod p; needs alpha known down to t^-1.
unsigned e_of(const KElem& alpha);

enum class EvalStrategy {
  Auto,    // table when q^N <= 2^16, direct otherwise
  Table,   // precomputed coefficient vectors of x^r for every x in G_N
  Direct,  // powers rebuilt per x by repeated multiplication
};

/// Coefficient vectors of x^r for every x in G_N and every r in `exps`.
class PowerTable {
 public:
  PowerTable(FieldPtr field, unsigned N, std::vector<unsigned> exps, std::uint64_t budget = kDefaultBudget);

  unsigned N() const { return N_; }
  const std::vector<unsigned>& exps() const { return exps_; }
  /// Coefficients of x^{exps[k]} for x = from_index(index), length exps[k](N-1)+1.
  const Elem* get(std::size_t k, std::uint64_t index) const {
    return data_[k].data() + index * stride_[k];
  }
  std::size_t length(std::size_t k) const { return stride_[k]; }

 private:
  FieldPtr field_;
  unsigned N_;
  std::vector<unsigned> exps_;
  std::vector<std::size_t> stride_;
  std::vector<std::vector<Elem>> data_;
};

/// Reads the first `depth` fractional digits of f(x) for x in G_N.
/// Each coefficient alpha_r is reduced once to the digit vector of {alpha_r},
/// after which the digit of t^-j in alpha_r x^r is sum_i a_{-j-i} c_i.
class DigitEvaluator {
 public:
  DigitEvaluator(const ExpPoly& f, unsigned N, unsigned depth = 1,
                 EvalStrategy strategy = EvalStrategy::Auto,
                 std::shared_ptr<const PowerTable> table = nullptr);

  unsigned depth() const { return depth_; }
  unsigned N() const { return N_; }
  bool uses_table() const { return static_cast<bool>(table_); }

  /// Per-thread work buffers.
  struct Scratch {
    std::vector<Elem> x, pw, tmp;
  };
  Scratch scratch() const;

  /// Digits of t^-1 .. t^-depth of f(x), x = from_index(index), into out[0..depth).
  void digits(std::uint64_t index, Elem* out, Scratch& s) const;
  /// Residue of f(x).
  Elem residue(std::uint64_t index, Scratch& s) const;

 private:
  void accumulate(const Elem* c, std::size_t len, const std::vector<Elem>& fd, Elem* out) const;

  FieldPtr field_;
  unsigned N_, depth_;
  std::vector<unsigned> exps_;            // positive exponents with nonzero fractional part
  std::vector<std::vector<Elem>> fdig_;   // fractional digits, fdig_[k][i] = a_{-1-i}
  std::vector<std::size_t> table_slot_;   // index of exps_[k] inside table_->exps()
  std::vector<Elem> const_digits_;
  std::shared_ptr<const PowerTable> table_;
};

/// sum over x in G_N of e(f(x)).
CharSum weyl_sum(const ExpPoly& f, unsigned N, const RunOptions& opts = {},
                 EvalStrategy strategy = EvalStrategy::Auto);
/// The same sum restricted to indices [lo, hi) of G_N.
CharSum weyl_sum_range(const ExpPoly& f, unsigned N, std::uint64_t lo, std::uint64_t hi,
                       EvalStrategy strategy = EvalStrategy::Auto);
/// weyl_sum(m f, N).
CharSum twisted_sum(const ExpPoly& f, const Poly& m, unsigned N, const RunOptions& opts = {},
                    EvalStrategy strategy = EvalStrategy::Auto);

enum class Orthogonality { Full, Zero };
/// sum_{x in G_N} e(alpha x) is q^N when ord{alpha} < -N and 0 otherwise.
Orthogonality orthogonality(const KElem& alpha, unsigned N);

/// x = from_index(index) as a coefficient vector of length N.
void index_digits(unsigned q, std::uint64_t index, unsigned N, Elem* out);

}  // namespace fqlab
