#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fqlab/kelem.hpp"

namespace fqlab {

/// alpha = [b_0; b_1, b_2, ...] with ord b_i > 0 for i >= 1.
struct CFExpansion {
  std::vector<Poly> quotients;
  /// The expansion terminated: the input is the rational [b_0; ..., b_n].
  bool complete = false;
  /// Stopped because the next quotient could not be certified from the
  /// known digits (truncated series only).
  bool exhausted = false;
};

CFExpansion cf_expand(const KElem& alpha, std::size_t max_terms);

struct Convergent {
  Poly a, g;
};
/// a_n = b_n a_{n-1} + a_{n-2}, g_n = b_n g_{n-1} + g_{n-2}, seeded with
/// (a_{-2}, g_{-2}) = (0, 1) and (a_{-1}, g_{-1}) = (1, 0).
std::vector<Convergent> convergents(const CFExpansion& cf);

/// Exact test that a < b is certified, false when b <= a is certified, and a
/// PrecisionError when a truncated series leaves it open.
bool certify_ord_below(const KElem& x, long bound);

struct Quality {
  Ord quality = Ord::neg_inf();    // ord(g_n alpha - a_n)
  Ord predicted = Ord::neg_inf();  // -ord g_{n+1}, -inf past the last convergent of a rational
  bool agrees() const { return quality == predicted; }
};
/// ord(g_n alpha - a_n) next to -ord g_{n+1}. Needs convergent n+1 unless the
/// expansion is complete and n is its last index.
Quality approx_quality(const KElem& alpha, const CFExpansion& cf, const std::vector<Convergent>& table,
                       std::size_t n);

struct LegendreResult {
  bool hypothesis = false;            // ord(g alpha - a) < -ord g
  std::optional<std::size_t> index;   // a/g = a_n/g_n in lowest terms
};
/// Locates a/g among the convergents of alpha when ord(g alpha - a) < -ord g.
LegendreResult legendre_recover(const KElem& alpha, const Poly& a, const Poly& g,
                                std::size_t max_terms = 4096);

struct Approximation {
  Poly a, g;
  // ord(g alpha - a); for a truncated series whose residual vanishes at every
  // known digit this is the bound floor - 1 instead
  Ord quality = Ord::neg_inf();
};
/// Coprime (a, g) with ord g <= kM and ord(g alpha - a) < -kM: the last
/// convergent with ord g_n <= kM. Both conditions are checked directly.
Approximation dirichlet_approx(const KElem& alpha, unsigned k, unsigned M);
/// Same with the bound B = kM given directly.
Approximation dirichlet_approx_bound(const KElem& alpha, long B);

/// kappa as an exact fraction num/den > 1.
struct Kappa {
  long num = 2, den = 1;
};

struct ProbeRow {
  unsigned N = 0;
  bool found = false;
  std::optional<Approximation> best;  // convergent with the largest ord g < N
};
struct RationalityReport {
  std::vector<ProbeRow> rows;
  bool all_found() const;
};
/// For each N, looks for (a, g) with ord(g alpha - a) <= -kappa N and ord g < N.
/// Among such g the convergent with the largest ord g < N has the best quality,
/// so only that one is examined. PrecisionError when the answer for some N is
/// not determined by the known digits.
RationalityReport rationality_probe(const KElem& alpha, Kappa kappa, const std::vector<unsigned>& Ns);

}  // namespace fqlab
