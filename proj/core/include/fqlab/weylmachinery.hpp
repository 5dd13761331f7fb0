#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "fqlab/contfrac.hpp"
#include "fqlab/exponents.hpp"
#include "fqlab/expsum.hpp"

namespace fqlab {

struct ShiftCheck {
  CharSum lhs;  // #A * sum_x e(f(x))
  CharSum rhs;  // sum_x sum_{y in A} e(f(y - x))
  bool equal() const { return lhs == rhs; }
};
/// Both sides of Weyl's shift for a multiset A of G_N.
ShiftCheck weyl_shift_check(const ExpPoly& f, const std::vector<Poly>& A, unsigned N,
                            const RunOptions& opts = {});

/// f(y - x) = lead y^k + sum_j gammas[j] y^j + constant, k maximal in the support.
struct ShiftExpansion {
  unsigned k = 0;
  KElem lead;
  std::map<unsigned, KElem> gammas;  // j in S(K) minus {k}, zero terms dropped
  KElem constant;

  /// The expansion as a polynomial in y.
  ExpPoly as_exppoly(const FieldPtr& field) const;
};
/// DomainError unless k is a maximal element of the support of f.
ShiftExpansion shift_expand(const ExpPoly& f, const Poly& x, unsigned k);

/// Residue of f(y - x) against the expansion at y, for every y in G_N.
bool shift_pointwise_check(const ExpPoly& f, const Poly& x, const ShiftExpansion& se, unsigned N);

struct SpacingResult {
  Ord min_gap = Ord::neg_inf();  // min over distinct l1, l2 of ord{alpha_k (l1^k - l2^k)}
  long bound = 0;                // min(-ord g, k(M - N)) in ord terms
  bool pass = false;
};
/// Gaps of { alpha_k l^k : l in L0 }. The hypotheses are verified first and a
/// violation throws HypothesisError; a failure of the gap bound is reported in
/// the result instead.
SpacingResult spacing_check(const KElem& alpha_k, unsigned k, const Poly& g, const Poly& a, unsigned M,
                            unsigned N, const std::vector<Poly>& L0);

/// Classes of residues mod g coprime to g: residues are grouped by their k-th
/// power and class i takes the i-th member of every group, so two distinct
/// members of a class never share a k-th power.
std::vector<std::vector<Poly>> kth_power_classes(const Poly& g, unsigned k,
                                                 std::uint64_t budget = kDefaultBudget);

/// The monic irreducibles of degree M coprime to g whose residue falls in the
/// largest class of kth_power_classes(g, k).
std::vector<Poly> select_L0(const Poly& g, unsigned k, unsigned M, std::uint64_t budget = kDefaultBudget);

struct SieveResult {
  double lhs = 0;
  double rhs = 0;        // max{q^N, q^{K-1}} sum |b_x|^2
  bool pass = false;
  double rhs_sharp = 0;  // max{q^N, q^K} sum |b_x|^2
  bool pass_sharp = false;
};
/// Large sieve inequality for points Gamma spaced at least q^-K apart and
/// weights b indexed by G_N. Spacing is verified first (HypothesisError).
/// The q^{K-1} form can fail when some pair is exactly q^-K apart: with
/// q = 2, N = 1, Gamma = {0, 1/t^2, 1/t, 1/t + 1/t^2}, b = 1, lhs = 8 > 4.
/// The q^K form always holds, since S depends only on the digits of gamma
/// at t^-1 .. t^-N.
SieveResult large_sieve_check(const std::vector<KElem>& Gamma, long K,
                              const std::vector<std::complex<double>>& b, unsigned N);

struct MinorArcReport {
  CharSum sum;
  double magnitude = 0;
  double threshold = 0;  // q^{N - eta}
  bool triggered = false;
  std::optional<Approximation> approx;
  long bound_used = -1;  // denominator bound B whose Dirichlet pair was kept
};
/// Weyl sum of f next to the best rational approximation of alpha_k over the
/// Dirichlet bounds B = 0..kN, scored by max(ord(g alpha_k - a) + kN, ord g).
MinorArcReport minor_arc_probe(const ExpPoly& f, unsigned k, unsigned N, double eta,
                               const RunOptions& opts = {});

}  // namespace fqlab
