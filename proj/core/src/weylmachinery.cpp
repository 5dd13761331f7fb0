#include "fqlab/weylmachinery.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fqlab/enumerate.hpp"
#include "fqlab/errors.hpp"

namespace fqlab {

ShiftCheck weyl_shift_check(const ExpPoly& f, const std::vector<Poly>& A, unsigned N, const RunOptions& opts) {
  if (A.empty()) throw DomainError("Weyl shift needs a nonempty A");
  const Field& F = *f.field();
  const std::uint64_t n = checked_power(F.q(), N, opts.budget);
  for (const Poly& y : A)
    if (y.degree() >= Ord(static_cast<long>(N))) throw DomainError("A must lie in G_N");

  ShiftCheck out;
  const CharSum s = weyl_sum(f, N, opts);
  out.lhs = CharSum(F.p());
  for (unsigned r = 0; r < F.p(); ++r) out.lhs.counts[r] = s.counts[r] * A.size();

  const DigitEvaluator ev(f, N, 1, EvalStrategy::Direct);
  auto scratch = ev.scratch();
  out.rhs = CharSum(F.p());
  for (std::uint64_t xi = 0; xi < n; ++xi) {
    const Poly x = Poly::from_index(f.field(), xi);
    for (const Poly& y : A) out.rhs.add(F.char_value(ev.residue((y - x).index(), scratch)));
  }
  return out;
}

ExpPoly ShiftExpansion::as_exppoly(const FieldPtr& field) const {
  ExpPoly out(field);
  out.set(k, lead);
  for (const auto& [j, g] : gammas) out.set(j, g);
  out.set(0, constant);
  return out;
}

ShiftExpansion shift_expand(const ExpPoly& f, const Poly& x, unsigned k) {
  const FieldPtr& field = f.field();
  const Field& F = *field;
  const std::vector<unsigned> sup = f.support();
  const ExponentSet K(sup.begin(), sup.end());
  if (!maximal_elements(F.p(), K).count(k)) throw DomainError("shift_expand: k is not maximal in the support");

  ShiftExpansion se{k, f.coeff(k), {}, f.coeff(0)};
  const Poly mx = -x;
  for (const auto& [r, alpha] : f.terms()) {
    if (r == 0) continue;
    // (y - x)^r = sum_{j <=_p r} C(r, j) y^j (-x)^{r-j}
    for (unsigned j = 0; j <= r; ++j) {
      const unsigned c = lucas_binom(F.p(), r, j);
      if (c == 0) continue;
      if (j == k) {
        if (r != k) throw DomainError("shift_expand: k is dominated by another exponent");
        continue;  // the lead term alpha_k y^k
      }
      const KElem term = scale(pow(mx, r - j) * alpha, F.from_int(c));
      if (j == 0) {
        se.constant = se.constant + term;
      } else {
        auto it = se.gammas.find(j);
        if (it == se.gammas.end()) se.gammas.emplace(j, term);
        else it->second = it->second + term;
      }
    }
  }
  std::erase_if(se.gammas, [](const auto& kv) { return kv.second.is_exact_zero(); });
  return se;
}

bool shift_pointwise_check(const ExpPoly& f, const Poly& x, const ShiftExpansion& se, unsigned N) {
  const FieldPtr& field = f.field();
  const std::uint64_t n = checked_power(field->q(), N, kDefaultBudget);
  const DigitEvaluator ev(se.as_exppoly(field), N, 1, EvalStrategy::Direct);
  auto scratch = ev.scratch();
  for (std::uint64_t yi = 0; yi < n; ++yi) {
    const Poly y = Poly::from_index(field, yi);
    if (f.eval(y - x).residue() != ev.residue(yi, scratch)) return false;
  }
  return true;
}

SpacingResult spacing_check(const KElem& alpha_k, unsigned k, const Poly& g, const Poly& a, unsigned M,
                            unsigned N, const std::vector<Poly>& L0) {
  const Field& F = *alpha_k.field();
  if (k == 0 || k % F.p() == 0) throw HypothesisError("spacing: p divides k");
  if (M == 0 || M > N) throw HypothesisError("spacing: need 1 <= M <= N");
  if (g.is_zero()) throw HypothesisError("spacing: g = 0");
  if (gcd(a, g).degree() != Ord(0)) throw HypothesisError("spacing: (a, g) != 1");
  const long dg = g.degree().value();
  const long kM = static_cast<long>(k) * M, kN = static_cast<long>(k) * N;
  const KElem resid = g * alpha_k - KElem::poly(a);
  if (!certify_ord_below(resid, -kM)) throw HypothesisError("spacing: ord(g alpha - a) >= -kM");
  const bool quality_low = !certify_ord_below(resid, static_cast<long>(M) - kN);
  if (!quality_low && dg <= static_cast<long>(M))
    throw HypothesisError("spacing: need ord(g alpha - a) >= M - kN or ord g > M");
  for (const Poly& l : L0)
    if (!l.is_monic() || l.degree() != Ord(static_cast<long>(M)) || !is_irreducible(l))
      throw HypothesisError("spacing: L0 must hold monic irreducibles of degree M");
  std::vector<Poly> pw, res, pres;
  for (const Poly& l : L0) {
    pw.push_back(pow(l, k));
    res.push_back(l % g);
    pres.push_back(pw.back() % g);
  }
  for (std::size_t i = 0; i < L0.size(); ++i)
    for (std::size_t j = i + 1; j < L0.size(); ++j)
      if ((pres[i] == pres[j]) != (res[i] == res[j]))
        throw HypothesisError("spacing: L0 lacks the k-th power class property mod g");

  SpacingResult out;
  out.bound = std::min(-dg, static_cast<long>(k) * (static_cast<long>(M) - static_cast<long>(N)));
  out.pass = true;
  bool any = false;
  for (std::size_t i = 0; i < L0.size(); ++i)
    for (std::size_t j = i + 1; j < L0.size(); ++j) {
      if (L0[i] == L0[j]) continue;
      const FracOrd fo = frac_ord((pw[i] - pw[j]) * alpha_k, out.bound);
      Ord gap = fo.ord;
      if (fo.below_threshold) {
        out.pass = false;
        // only known to be below the bound
        if (gap.is_neg_inf() && !alpha_k.is_exact()) gap = Ord(out.bound - 1);
      }
      if (!any || gap < out.min_gap) out.min_gap = gap;
      any = true;
    }
  if (!any) out.min_gap = Ord(0);  // no pairs: vacuous
  return out;
}

std::vector<std::vector<Poly>> kth_power_classes(const Poly& g, unsigned k, std::uint64_t budget) {
  if (g.is_zero()) throw DomainError("kth_power_classes: g = 0");
  const FieldPtr& field = g.field();
  const unsigned dg = static_cast<unsigned>(g.degree().value());
  const std::uint64_t n = checked_power(field->q(), dg, budget);
  std::vector<Poly> keys;
  std::vector<std::vector<Poly>> groups;
  for (std::uint64_t i = 0; i < n; ++i) {
    const Poly r = Poly::from_index(field, i);
    if (dg > 0 && gcd(r, g).degree() != Ord(0)) continue;
    const Poly key = mod_pow(r, k, g);
    auto it = std::find(keys.begin(), keys.end(), key);
    if (it == keys.end()) {
      keys.push_back(key);
      groups.push_back({r});
    } else {
      groups[static_cast<std::size_t>(it - keys.begin())].push_back(r);
    }
  }
  std::size_t width = 0;
  for (const auto& grp : groups) width = std::max(width, grp.size());
  std::vector<std::vector<Poly>> classes(width);
  for (const auto& grp : groups)
    for (std::size_t i = 0; i < grp.size(); ++i) classes[i].push_back(grp[i]);
  return classes;
}

std::vector<Poly> select_L0(const Poly& g, unsigned k, unsigned M, std::uint64_t budget) {
  const auto classes = kth_power_classes(g, k, budget);
  std::vector<Poly> out;
  if (classes.empty()) return out;
  const auto& cls = classes.front();  // the first class is the largest
  for (const Poly& l : irreducibles(g.field(), M, budget)) {
    const Poly r = l % g;
    if (std::find(cls.begin(), cls.end(), r) != cls.end()) out.push_back(l);
  }
  return out;
}

SieveResult large_sieve_check(const std::vector<KElem>& Gamma, long K,
                              const std::vector<std::complex<double>>& b, unsigned N) {
  if (Gamma.empty()) throw DomainError("large sieve needs a nonempty Gamma");
  const FieldPtr& field = Gamma.front().field();
  const Field& F = *field;
  const std::uint64_t n = checked_power(F.q(), N, kDefaultBudget);
  if (b.size() != n) throw DomainError("weights must be indexed by G_N");
  for (std::size_t i = 0; i < Gamma.size(); ++i)
    for (std::size_t j = i + 1; j < Gamma.size(); ++j)
      if (frac_ord(Gamma[i] - Gamma[j], -K).below_threshold)
        throw HypothesisError("large sieve: points closer than q^-K");

  std::vector<std::complex<double>> roots(F.p());
  for (unsigned r = 0; r < F.p(); ++r) {
    const double th = 2.0 * std::numbers::pi * r / F.p();
    roots[r] = {std::cos(th), std::sin(th)};
  }
  SieveResult out;
  for (const KElem& gamma : Gamma) {
    ExpPoly f(field);
    f.set(1, gamma);
    const DigitEvaluator ev(f, N, 1);
    auto scratch = ev.scratch();
    std::complex<double> S = 0;
    for (std::uint64_t x = 0; x < n; ++x) S += b[x] * roots[F.char_value(ev.residue(x, scratch))];
    out.lhs += std::norm(S);
  }
  double bsq = 0;
  for (const auto& w : b) bsq += std::norm(w);
  const double factor = std::max(std::pow(static_cast<double>(F.q()), static_cast<double>(N)),
                                 std::pow(static_cast<double>(F.q()), static_cast<double>(K - 1)));
  out.rhs = factor * bsq;
  out.pass = out.lhs <= out.rhs * (1.0 + 1e-6);
  out.rhs_sharp = std::max(std::pow(static_cast<double>(F.q()), static_cast<double>(N)),
                           std::pow(static_cast<double>(F.q()), static_cast<double>(K))) * bsq;
  out.pass_sharp = out.lhs <= out.rhs_sharp * (1.0 + 1e-6);
  return out;
}

MinorArcReport minor_arc_probe(const ExpPoly& f, unsigned k, unsigned N, double eta, const RunOptions& opts) {
  const Field& F = *f.field();
  const std::vector<unsigned> sup = f.support();
  const ExponentSet K(sup.begin(), sup.end());
  if (!ktilde(F.p(), K).count(k)) throw HypothesisError("minor_arc_probe: k is not in K-tilde of the support");

  MinorArcReport rep;
  rep.sum = weyl_sum(f, N, opts);
  rep.magnitude = rep.sum.is_full() ? static_cast<double>(rep.sum.total())
                  : rep.sum.is_zero() ? 0.0 : rep.sum.magnitude();
  rep.threshold = std::pow(static_cast<double>(F.q()), static_cast<double>(N) - eta);
  rep.triggered = rep.magnitude >= rep.threshold * (1.0 - 1e-12);
  if (!rep.triggered) return rep;

  const KElem alpha = f.coeff(k);
  const long kN = static_cast<long>(k) * N;
  auto score = [&](const Approximation& ap) {
    const long dg = ap.g.degree().value();
    return ap.quality.is_neg_inf() ? dg : std::max(ap.quality.value() + kN, dg);
  };
  for (long B = 0; B <= kN; ++B) {
    std::optional<Approximation> ap;
    try {
      ap = dirichlet_approx_bound(alpha, B);
    } catch (const PrecisionError&) {
      break;
    }
    if (!rep.approx || score(*ap) < score(*rep.approx)) {
      rep.approx = ap;
      rep.bound_used = B;
    }
  }
  return rep;
}

}  // namespace fqlab
