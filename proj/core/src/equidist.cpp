#include "fqlab/equidist.hpp"

#include <algorithm>
#include <numeric>

#include "fqlab/errors.hpp"
#include "fqlab/parallel.hpp"

namespace fqlab {

std::uint64_t CylinderTable::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

CylinderTable CylinderTable::parent() const {
  if (d == 0) throw DomainError("depth-0 table has no parent");
  CylinderTable out{q, d - 1, N, std::vector<std::uint64_t>(counts.size() / q, 0)};
  for (std::size_t i = 0; i < counts.size(); ++i) out.counts[i / q] += counts[i];
  return out;
}

namespace {

using Counts = std::vector<std::uint64_t>;

CylinderTable count_with(const DigitEvaluator& ev, const Field& F, unsigned N, unsigned d, std::uint64_t n,
                         unsigned threads) {
  const std::uint64_t cells = checked_power(F.q(), d, kDefaultBudget);
  auto body = [&](std::uint64_t lo, std::uint64_t hi) {
    Counts c(cells, 0);
    auto s = ev.scratch();
    std::vector<Elem> dig(d);
    for (std::uint64_t i = lo; i < hi; ++i) {
      ev.digits(i, dig.data(), s);
      std::uint64_t cell = 0;
      for (unsigned j = 0; j < d; ++j) cell = cell * F.q() + dig[j];
      ++c[cell];
    }
    return c;
  };
  Counts all = parallel_reduce(n, threads, Counts(cells, 0), body, [](Counts& acc, const Counts& part) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += part[i];
  });
  return {F.q(), d, N, std::move(all)};
}

}  // namespace

CylinderTable cylinder_counts(const ExpPoly& f, unsigned N, unsigned d, const RunOptions& opts) {
  const Field& F = *f.field();
  const std::uint64_t n = checked_power(F.q(), N, opts.budget);
  if (d == 0) return {F.q(), 0, N, {n}};
  const DigitEvaluator ev(f, N, d);
  return count_with(ev, F, N, d, n, opts.threads);
}

Discrepancy discrepancy(const CylinderTable& t) {
  // |count q^d - q^N| / q^{N+d}
  std::uint64_t qd = 1, qN = 1;
  for (unsigned i = 0; i < t.d; ++i) qd *= t.q;
  for (unsigned i = 0; i < t.N; ++i) qN *= t.q;
  std::uint64_t worst = 0;
  for (auto c : t.counts) {
    const std::uint64_t a = c * qd;
    worst = std::max(worst, a > qN ? a - qN : qN - a);
  }
  Discrepancy out{worst, qN * qd};
  const std::uint64_t g = std::gcd(out.num, out.den);
  if (g > 1) {
    out.num /= g;
    out.den /= g;
  }
  if (out.num == 0) out.den = 1;
  return out;
}

std::vector<ScanRow> weyl_scan(const ExpPoly& f, const std::vector<unsigned>& Ns, unsigned D, unsigned depth,
                               const RunOptions& opts) {
  const FieldPtr& field = f.field();
  const Field& F = *field;
  const std::uint64_t nm = checked_power(F.q(), D, opts.budget);
  std::vector<ScanRow> rows;
  for (unsigned N : Ns) {
    const std::uint64_t n = checked_power(F.q(), N, opts.budget);
    std::shared_ptr<const PowerTable> table;
    const auto sup = f.support();
    if (n <= (std::uint64_t{1} << 16) && !sup.empty())
      table = std::make_shared<PowerTable>(field, N, sup, opts.budget);
    ScanRow row;
    row.N = N;
    bool first = true;
    for (std::uint64_t mi = 1; mi < nm; ++mi) {
      const Poly m = Poly::from_index(field, mi);
      const ExpPoly mf = f.scaled(m);
      const DigitEvaluator ev(mf, N, 1, table ? EvalStrategy::Table : EvalStrategy::Direct, table);
      const CharSum cs = parallel_reduce(
          n, opts.threads, CharSum(F.p()),
          [&](std::uint64_t lo, std::uint64_t hi) {
            CharSum part(F.p());
            auto s = ev.scratch();
            for (std::uint64_t i = lo; i < hi; ++i) part.add(F.char_value(ev.residue(i, s)));
            return part;
          },
          [](CharSum& acc, const CharSum& part) { acc += part; });
      const double v = cs.normalized();
      if (cs.is_full()) row.certificate = true;
      if (first || v > row.sup) {
        row.sup = v;
        row.argmax = m;
        first = false;
      }
    }
    if (depth > 0) row.disc = discrepancy(cylinder_counts(f, N, depth, opts));
    rows.push_back(std::move(row));
  }
  return rows;
}

QpReduction reduce_qp(const ExpPoly& f, std::optional<unsigned> N) {
  const FieldPtr& field = f.field();
  const unsigned p = field->p();
  if (field->m() != 1) throw DomainError("reduce_qp needs q = p");
  const std::vector<unsigned> sup = f.support();
  QpReduction out{calI(p, ExponentSet(sup.begin(), sup.end())), {}, ExpPoly(field)};
  for (unsigned k : out.I) {
    std::optional<long> out_floor;
    if (N) out_floor = -(1 + static_cast<long>(k) * std::max(0L, static_cast<long>(*N) - 1));
    std::optional<KElem> acc;
    unsigned v = 0;
    for (unsigned long long r = k; r <= f.max_exponent(); r *= p, ++v) {
      if (!f.has(static_cast<unsigned>(r))) continue;
      const KElem& alpha = f.terms().at(static_cast<unsigned>(r));
      KElem term = alpha;
      if (v > 0) {
        if (alpha.is_exact() && !out_floor)
          throw PrecisionError("reduce_qp: exact coefficient under T needs a target N");
        term = tmap(alpha, v, alpha.is_exact() ? out_floor : std::nullopt);
      }
      acc = acc ? *acc + term : term;
    }
    if (acc) {
      out.S.emplace(k, *acc);
      out.reduced.set(k, *acc);
    }
  }
  if (f.has(0)) out.reduced.set(0, f.coeff(0));
  return out;
}

bool ObstructionReport::any_obstruction() const {
  return std::any_of(rows.begin(), rows.end(), [](const ObstructionRow& r) { return r.obstruction; });
}

ObstructionReport obstruction_probe(const ExpPoly& f, unsigned k, unsigned m_bound, unsigned cf_bound,
                        std::optional<unsigned> N) {
  const FieldPtr& field = f.field();
  if (field->m() != 1) throw DomainError("obstruction_probe needs q = p");
  const std::uint64_t nm = checked_power(field->q(), m_bound, kDefaultBudget);
  ObstructionReport rep;
  rep.k = k;
  for (std::uint64_t mi = 1; mi < nm; ++mi) {
    ObstructionRow row{Poly::from_index(field, mi), false, std::nullopt};
    const QpReduction red = reduce_qp(f.scaled(row.m), N);
    if (!red.I.count(k)) throw DomainError("obstruction_probe: k is not in calI of the support");
    auto it = red.S.find(k);
    const KElem Sk = it == red.S.end() ? KElem::zero(field) : it->second;
    const CFExpansion cf = cf_expand(Sk, static_cast<std::size_t>(cf_bound) + 2);
    const auto table = convergents(cf);
    for (const Convergent& c : table) {
      if (c.g.degree() > Ord(static_cast<long>(cf_bound))) break;
      const KElem r = c.g * Sk - KElem::poly(c.a);
      const bool vanishes = r.is_exact() ? r.is_exact_zero() : r.series().known_zero();
      if (vanishes) {
        row.obstruction = true;
        row.match = c;
        break;
      }
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace fqlab
