#include "fqlab/meanvalue.hpp"

#include <cmath>
#include <string>
#include <unordered_map>

#include "fqlab/errors.hpp"
#include "fqlab/expsum.hpp"
#include "fqlab/parallel.hpp"
#include "fqlab/poly.hpp"

namespace fqlab {

ExponentProfile profile(unsigned p, const ExponentSet& K) {
  if (K.empty()) throw DomainError("profile of an empty exponent set");
  const ExponentSet sp = sprime(p, K);
  ExponentProfile out;
  out.psi = static_cast<unsigned>(sp.size());
  out.phi = *sp.rbegin();
  for (unsigned i : sp) out.kappa += i;
  out.s_min = out.psi * out.phi + out.psi;
  return out;
}

std::uint64_t js_naive(const FieldPtr& field, const ExponentSet& K, unsigned s, unsigned N,
                       std::uint64_t budget) {
  const std::uint64_t n = checked_power(field->q(), N, budget);
  const std::uint64_t tuples = checked_power(n, 2ull * s, budget);
  const ExponentSet S = shadow(field->p(), K);
  // powers[x][e] = x^j for the e-th exponent j of S(K)
  std::vector<std::vector<Poly>> powers(n);
  for (std::uint64_t x = 0; x < n; ++x) {
    const Poly px = Poly::from_index(field, x);
    for (unsigned j : S) powers[x].push_back(pow(px, j));
  }
  std::vector<std::uint64_t> idx(2 * s, 0);
  std::uint64_t count = 0;
  for (std::uint64_t t = 0; t < tuples; ++t) {
    bool ok = true;
    for (std::size_t e = 0; e < S.size() && ok; ++e) {
      Poly lhs(field), rhs(field);
      for (unsigned i = 0; i < s; ++i) {
        lhs += powers[idx[i]][e];
        rhs += powers[idx[s + i]][e];
      }
      ok = lhs == rhs;
    }
    if (ok) ++count;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (++idx[i] < n) break;
      idx[i] = 0;
    }
  }
  return count;
}

std::uint64_t js_histogram(const FieldPtr& field, const ExponentSet& K, unsigned s, unsigned N,
                           const RunOptions& opts) {
  if (s == 0) return 1;
  const Field& F = *field;
  const std::uint64_t n = checked_power(F.q(), N, opts.budget);
  const std::uint64_t tuples = checked_power(n, s, opts.budget);
  const ExponentSet sp = sprime(F.p(), K);
  const std::vector<unsigned> exps(sp.begin(), sp.end());
  const PowerTable table(field, N, exps, opts.budget);
  std::size_t key_len = 0;
  for (std::size_t e = 0; e < exps.size(); ++e) key_len += table.length(e);

  using Hist = std::unordered_map<std::string, std::uint64_t>;
  // each chunk covers a range of leading tuple entries
  auto body = [&](std::uint64_t lo, std::uint64_t hi) {
    Hist h;
    std::string key(key_len, '\0');
    const std::uint64_t rest = tuples / n;
    std::vector<std::uint64_t> idx(s, 0);
    for (std::uint64_t lead = lo; lead < hi; ++lead) {
      for (std::uint64_t t = 0; t < rest; ++t) {
        std::uint64_t v = t;
        idx[0] = lead;
        for (unsigned i = 1; i < s; ++i) {
          idx[i] = v % n;
          v /= n;
        }
        std::size_t off = 0;
        for (std::size_t e = 0; e < exps.size(); ++e) {
          const std::size_t len = table.length(e);
          for (std::size_t c = 0; c < len; ++c) {
            Elem acc = 0;
            for (unsigned i = 0; i < s; ++i) acc = F.add(acc, table.get(e, idx[i])[c]);
            key[off + c] = static_cast<char>(acc);
          }
          off += len;
        }
        ++h[key];
      }
    }
    return h;
  };
  const Hist hist = parallel_reduce(
      n, opts.threads, Hist{}, body, [](Hist& acc, const Hist& part) {
        for (const auto& [k, c] : part) acc[k] += c;
      });
  std::uint64_t J = 0;
  for (const auto& [k, c] : hist) J += c * c;
  return J;
}

std::vector<GrowthRow> growth_table(const FieldPtr& field, const ExponentSet& K, unsigned s,
                                    const std::vector<unsigned>& Ns, const RunOptions& opts) {
  const ExponentProfile pr = profile(field->p(), K);
  std::vector<GrowthRow> rows;
  for (unsigned N : Ns) {
    GrowthRow r;
    r.N = N;
    r.J = js_histogram(field, K, s, N, opts);
    const double expo = static_cast<double>(N) * (2.0 * s - static_cast<double>(pr.kappa));
    r.ratio = static_cast<double>(r.J) / std::pow(static_cast<double>(field->q()), expo);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace fqlab
