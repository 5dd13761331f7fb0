#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "fqlab/contfrac.hpp"
#include "fqlab/exponents.hpp"
#include "fqlab/expsum.hpp"

namespace fqlab {

/// Counts of {f(x)}, x in G_N, by their first d fractional digits.
/// counts[i] belongs to the prefix (c_1, ..., c_d) with i = sum_j c_j q^{d-j}.
struct CylinderTable {
  unsigned q = 0, d = 0, N = 0;
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const;
  /// The same data at depth d - 1.
  CylinderTable parent() const;
};
CylinderTable cylinder_counts(const ExpPoly& f, unsigned N, unsigned d, const RunOptions& opts = {});

/// max over cylinders of |count / q^N - q^-d| as the exact fraction num/den.
struct Discrepancy {
  std::uint64_t num = 0, den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};
Discrepancy discrepancy(const CylinderTable& table);

struct ScanRow {
  unsigned N = 0;
  double sup = 0;                // max over m in G_D minus {0} of |S_N(m f)| / q^N
  std::optional<Poly> argmax;    // first m attaining the sup
  bool certificate = false;      // some twist sums to exactly q^N
  std::optional<Discrepancy> disc;
};
/// Weyl criterion evidence: for each N the largest normalized twisted sum over
/// nonzero m of degree < D, plus the depth-d discrepancy when depth > 0.
std::vector<ScanRow> weyl_scan(const ExpPoly& f, const std::vector<unsigned>& Ns, unsigned D,
                               unsigned depth = 0, const RunOptions& opts = {});

/// q = p reduction: S_k(f) = sum_v T^v(alpha_{p^v k}) for k in calI(support f).
struct QpReduction {
  ExponentSet I;
  std::map<unsigned, KElem> S;
  ExpPoly reduced;  // sum_k S_k u^k + alpha_0
};
/// DomainError unless q = p. Exact coefficients passed through T need a
/// target N, which sets the output floor -(1 + k(N - 1)) for S_k.
QpReduction reduce_qp(const ExpPoly& f, std::optional<unsigned> N = std::nullopt);

struct ObstructionRow {
  Poly m;
  bool obstruction = false;
  std::optional<Convergent> match;  // a/g agreeing with S_k(m f) at every known digit
};
struct ObstructionReport {
  unsigned k = 0;
  std::vector<ObstructionRow> rows;
  bool any_obstruction() const;
};
/// For each nonzero m of degree < m_bound, expands S_k(m f) and flags m when
/// some convergent a/g with ord g <= cf_bound matches it at the tested precision.
ObstructionReport obstruction_probe(const ExpPoly& f, unsigned k, unsigned m_bound, unsigned cf_bound,
                        std::optional<unsigned> N = std::nullopt);

}  // namespace fqlab
