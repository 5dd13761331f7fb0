#include "fqlab/sieve.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "fqlab/errors.hpp"
#include "fqlab/exponents.hpp"
#include "fqlab/parallel.hpp"

namespace fqlab {

DenseSet DenseSet::from_list(unsigned N, std::vector<Poly> elems) {
  for (const Poly& a : elems)
    if (a.degree() >= Ord(static_cast<long>(N)))
      throw DomainError("element " + a.str() + " lies outside G_" + std::to_string(N));
  return {N, std::move(elems)};
}

DenseSet DenseSet::residue_class(const FieldPtr& field, unsigned N, const Poly& g,
                                 const std::vector<Poly>& residues, std::uint64_t budget) {
  if (g.is_zero()) throw DomainError("residue class modulo 0");
  std::vector<Poly> res;
  for (const Poly& r : residues) res.push_back(r % g);
  DenseSet out{N, {}};
  const std::uint64_t n = checked_power(field->q(), N, budget);
  for (std::uint64_t i = 0; i < n; ++i) {
    Poly x = Poly::from_index(field, i);
    if (std::find(res.begin(), res.end(), x % g) != res.end()) out.elems.push_back(std::move(x));
  }
  return out;
}

Density density(const DenseSet& A, unsigned N) {
  std::uint64_t den = 1, num = 0;
  if (!A.elems.empty()) {
    den = checked_power(A.elems.front().field()->q(), N, ~std::uint64_t{0});
    std::set<std::uint64_t> seen;
    for (const Poly& a : A.elems)
      if (a.degree() < Ord(static_cast<long>(N))) seen.insert(a.index());
    num = seen.size();
  }
  const std::uint64_t g = std::gcd(num, den);
  if (num == 0) return {0, 1};
  return {num / g, den / g};
}

namespace {

void merge_factors(std::map<std::uint64_t, Factor>& acc, const Poly& f, std::uint64_t budget) {
  for (const Factor& fa : factor_trial(f, budget)) {
    auto it = acc.find(fa.prime.index());
    if (it == acc.end()) acc.emplace(fa.prime.index(), fa);
    else it->second.exponent += fa.exponent;
  }
}

}  // namespace

GMBuild gM_build(const FieldPtr& field, const UPoly& phi, unsigned M, GMode mode, std::uint64_t max_degree,
                 std::uint64_t budget) {
  GMBuild out{mode, Poly::constant(field, 1), {}, std::nullopt, {}};
  std::map<std::uint64_t, Factor> fac;  // keyed by index, degrees grow with the key
  std::uint64_t deg = 0;
  for (unsigned d = 1; d < M; ++d) {
    const std::vector<Poly> polys = mode == GMode::Literal ? monics(field, d, budget) : irreducibles(field, d, budget);
    deg += static_cast<std::uint64_t>(d) * polys.size();
    if (deg > max_degree)
      throw BudgetError("deg g_" + std::to_string(M) + " exceeds " + std::to_string(max_degree));
    for (const Poly& h : polys) {
      out.g = out.g * h;
      merge_factors(fac, h, budget);
    }
  }
  for (auto& [key, fa] : fac) out.factors.push_back(fa);
  std::sort(out.factors.begin(), out.factors.end(), [](const Factor& a, const Factor& b) {
    return a.prime.degree() < b.prime.degree() ||
           (a.prime.degree() == b.prime.degree() && a.prime.index() < b.prime.index());
  });

  std::vector<std::pair<Poly, Poly>> parts;
  for (const Factor& fa : out.factors) {
    const Poly pe = pow(fa.prime, fa.exponent);
    const std::vector<Poly> roots = roots_mod(phi, pe, budget);
    if (roots.empty()) {
      out.note = "Phi has no root modulo (" + fa.prime.str() + ")^" + std::to_string(fa.exponent);
      return out;
    }
    parts.emplace_back(roots.front(), pe);
  }
  out.s = parts.empty() ? Poly(field) : crt(parts);
  return out;
}

UPoly compose_affine(const UPoly& phi, const Poly& g, const Poly& s) {
  const FieldPtr& field = phi.field();
  const Field& F = *field;
  std::map<unsigned, Poly> acc;
  for (const auto& [r, c] : phi.terms()) {
    // (g x + s)^r = sum_j C(r, j) g^j s^{r-j} x^j
    for (unsigned j = 0; j <= r; ++j) {
      const unsigned b = lucas_binom(F.p(), r, j);
      if (b == 0) continue;
      const Poly term = (c * pow(g, j) * pow(s, r - j)).scaled(F.from_int(b));
      auto it = acc.find(j);
      if (it == acc.end()) acc.emplace(j, term);
      else it->second += term;
    }
  }
  UPoly out(field);
  for (auto& [j, c] : acc) out.set(j, c);
  return out;
}

TMN t_mn(const UPoly& phi, const KElem& alpha, const GMBuild& gm, unsigned N, const RunOptions& opts) {
  if (!gm.s) throw HypothesisError("t_mn: " + (gm.note.empty() ? std::string("no root mod g_M") : gm.note));
  const UPoly composed = compose_affine(phi, gm.g, *gm.s);
  TMN out{weyl_sum(ExpPoly::from_upoly(composed, alpha), N, opts), 0.0, gm.g, *gm.s};
  out.normalized = out.sum.normalized();
  return out;
}

TMN t_mn(const UPoly& phi, const KElem& alpha, unsigned M, unsigned N, GMode mode, const RunOptions& opts) {
  return t_mn(phi, alpha, gM_build(phi.field(), phi, M, mode, 4096, opts.budget), N, opts);
}

std::optional<Witness> difference_search(const DenseSet& A, const UPoly& phi, unsigned x_bound,
                                         const RunOptions& opts) {
  if (A.elems.size() < 2) throw DomainError("difference_search needs #A >= 2");
  const FieldPtr& field = phi.field();
  const std::uint64_t n = checked_power(field->q(), x_bound, opts.budget);
  std::set<std::vector<Elem>> members;
  for (const Poly& a : A.elems) members.insert(a.coeffs());

  using Found = std::optional<std::pair<std::uint64_t, Witness>>;
  auto body = [&](std::uint64_t lo, std::uint64_t hi) -> Found {
    for (std::uint64_t xi = lo; xi < hi; ++xi) {
      const Poly x = Poly::from_index(field, xi);
      const Poly d = phi.eval(x);
      if (d.is_zero()) continue;
      for (const Poly& a : A.elems) {
        Poly a2 = a - d;
        if (members.count(a2.coeffs())) return std::make_pair(xi, Witness{a, std::move(a2), x});
      }
    }
    return std::nullopt;
  };
  const Found best = parallel_reduce(n, opts.threads, Found{}, body, [](Found& acc, const Found& part) {
    if (!acc || (part && part->first < acc->first)) acc = part;
  });
  if (!best) return std::nullopt;
  return best->second;
}

}  // namespace fqlab
