#include "fqlab/expsum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fqlab/enumerate.hpp"
#include "fqlab/errors.hpp"
#include "fqlab/parallel.hpp"

namespace fqlab {

std::uint64_t CharSum::total() const {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

bool CharSum::is_zero() const {
  return std::all_of(counts.begin(), counts.end(), [&](auto c) { return c == counts[0]; });
}

std::complex<double> CharSum::value() const {
  const double p = static_cast<double>(counts.size());
  std::complex<double> v = 0.0;
  for (std::size_t r = 0; r < counts.size(); ++r) {
    if (counts[r] == 0) continue;
    const double th = 2.0 * std::numbers::pi * static_cast<double>(r) / p;
    v += static_cast<double>(counts[r]) * std::complex<double>(std::cos(th), std::sin(th));
  }
  return v;
}

double CharSum::normalized() const {
  const std::uint64_t t = total();
  if (t == 0) return 0.0;
  if (is_full()) return 1.0;
  if (is_zero()) return 0.0;
  return magnitude() / static_cast<double>(t);
}

CharSum& CharSum::operator+=(const CharSum& o) {
  if (counts.empty()) counts.assign(o.counts.size(), 0);
  if (o.counts.size() != counts.size()) throw DomainError("CharSum merge across characteristics");
  for (std::size_t r = 0; r < counts.size(); ++r) counts[r] += o.counts[r];
  return *this;
}

std::string CharSum::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t r = 0; r < counts.size(); ++r) os << (r ? "," : "") << counts[r];
  os << ")";
  return os.str();
}

unsigned e_of(const KElem& alpha) { return alpha.field()->char_value(alpha.residue()); }

void index_digits(unsigned q, std::uint64_t index, unsigned N, Elem* out) {
  for (unsigned i = 0; i < N; ++i) {
    out[i] = static_cast<Elem>(index % q);
    index /= q;
  }
}

namespace {

// out = a * b; lengths la, lb >= 1, out has la + lb - 1 slots.
void raw_mul(const Field& F, const Elem* a, std::size_t la, const Elem* b, std::size_t lb, Elem* out) {
  std::fill(out, out + la + lb - 1, Elem{0});
  for (std::size_t i = 0; i < la; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < lb; ++j)
      if (b[j] != 0) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
}

std::size_t power_length(unsigned r, unsigned N) {
  return N == 0 ? 1 : static_cast<std::size_t>(r) * (N - 1) + 1;
}

constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 16;

}  // namespace

PowerTable::PowerTable(FieldPtr field, unsigned N, std::vector<unsigned> exps, std::uint64_t budget)
    : field_(std::move(field)), N_(N), exps_(std::move(exps)) {
  const Field& F = *field_;
  const std::uint64_t n = checked_power(F.q(), N_, budget);
  std::sort(exps_.begin(), exps_.end());
  const unsigned rmax = exps_.empty() ? 0 : exps_.back();
  for (unsigned r : exps_) {
    stride_.push_back(power_length(r, N_));
    data_.emplace_back(n * stride_.back(), Elem{0});
  }
  std::vector<Elem> x(std::max(N_, 1u)), cur, next;
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    index_digits(F.q(), idx, N_, x.data());
    const std::size_t lx = std::max(N_, 1u);
    cur.assign(1, Elem{1});
    std::size_t k = 0;
    for (unsigned r = 1; r <= rmax; ++r) {
      next.assign(cur.size() + lx - 1, Elem{0});
      raw_mul(F, cur.data(), cur.size(), x.data(), lx, next.data());
      cur.swap(next);
      if (k < exps_.size() && exps_[k] == r) {
        std::copy_n(cur.begin(), stride_[k], data_[k].begin() + idx * stride_[k]);
        ++k;
      }
    }
  }
}

DigitEvaluator::DigitEvaluator(const ExpPoly& f, unsigned N, unsigned depth, EvalStrategy strategy,
                               std::shared_ptr<const PowerTable> table)
    : field_(f.field()), N_(N), depth_(depth) {
  if (depth_ == 0) throw DomainError("digit depth must be positive");
  for (const auto& [r, a] : f.terms()) {
    if (r == 0) {
      const_digits_ = a.frac_digits(depth_);
      continue;
    }
    std::vector<Elem> fd = a.frac_digits(depth_ - 1 + power_length(r, N_));
    if (std::all_of(fd.begin(), fd.end(), [](Elem e) { return e == 0; })) continue;
    exps_.push_back(r);
    fdig_.push_back(std::move(fd));
  }
  if (const_digits_.empty()) const_digits_.assign(depth_, 0);

  const std::uint64_t n = checked_power(field_->q(), N_, kDefaultBudget);
  const bool want_table =
      strategy == EvalStrategy::Table || (strategy == EvalStrategy::Auto && n <= kTableLimit);
  if (!want_table || exps_.empty()) return;
  if (table && table->N() == N_ &&
      std::all_of(exps_.begin(), exps_.end(), [&](unsigned r) {
        return std::binary_search(table->exps().begin(), table->exps().end(), r);
      })) {
    table_ = std::move(table);
  } else {
    table_ = std::make_shared<PowerTable>(field_, N_, exps_);
  }
  for (unsigned r : exps_) {
    auto it = std::lower_bound(table_->exps().begin(), table_->exps().end(), r);
    table_slot_.push_back(static_cast<std::size_t>(it - table_->exps().begin()));
  }
}

DigitEvaluator::Scratch DigitEvaluator::scratch() const {
  Scratch s;
  s.x.resize(std::max(N_, 1u));
  return s;
}

void DigitEvaluator::accumulate(const Elem* c, std::size_t len, const std::vector<Elem>& fd,
                                Elem* out) const {
  const Field& F = *field_;
  for (unsigned j = 0; j < depth_; ++j) {
    Elem acc = out[j];
    for (std::size_t i = 0; i < len; ++i)
      if (c[i] != 0) acc = F.add(acc, F.mul(fd[j + i], c[i]));
    out[j] = acc;
  }
}

void DigitEvaluator::digits(std::uint64_t index, Elem* out, Scratch& s) const {
  std::copy(const_digits_.begin(), const_digits_.end(), out);
  if (exps_.empty()) return;
  if (table_) {
    for (std::size_t k = 0; k < exps_.size(); ++k)
      accumulate(table_->get(table_slot_[k], index), table_->length(table_slot_[k]), fdig_[k], out);
    return;
  }
  const Field& F = *field_;
  const std::size_t lx = s.x.size();
  index_digits(F.q(), index, N_, s.x.data());
  s.pw.assign(1, Elem{1});
  std::size_t k = 0;
  for (unsigned r = 1; k < exps_.size(); ++r) {
    s.tmp.resize(s.pw.size() + lx - 1);
    raw_mul(F, s.pw.data(), s.pw.size(), s.x.data(), lx, s.tmp.data());
    s.pw.swap(s.tmp);
    if (exps_[k] == r) {
      accumulate(s.pw.data(), power_length(r, N_), fdig_[k], out);
      ++k;
    }
  }
}

Elem DigitEvaluator::residue(std::uint64_t index, Scratch& s) const {
  Elem out[1];
  if (depth_ == 1) {
    digits(index, out, s);
    return out[0];
  }
  std::vector<Elem> all(depth_);
  digits(index, all.data(), s);
  return all[0];
}

namespace {

CharSum sum_range(const DigitEvaluator& ev, const Field& F, std::uint64_t lo, std::uint64_t hi) {
  CharSum cs(F.p());
  auto s = ev.scratch();
  for (std::uint64_t i = lo; i < hi; ++i) cs.counts[F.char_value(ev.residue(i, s))]++;
  return cs;
}

}  // namespace

CharSum weyl_sum(const ExpPoly& f, unsigned N, const RunOptions& opts, EvalStrategy strategy) {
  const Field& F = *f.field();
  const std::uint64_t n = checked_power(F.q(), N, opts.budget);
  const DigitEvaluator ev(f, N, 1, strategy);
  return parallel_reduce(
      n, opts.threads, CharSum(F.p()),
      [&](std::uint64_t lo, std::uint64_t hi) { return sum_range(ev, F, lo, hi); },
      [](CharSum& acc, const CharSum& part) { acc += part; });
}

CharSum weyl_sum_range(const ExpPoly& f, unsigned N, std::uint64_t lo, std::uint64_t hi,
                       EvalStrategy strategy) {
  const Field& F = *f.field();
  const std::uint64_t n = checked_power(F.q(), N, kDefaultBudget);
  if (lo > hi || hi > n) throw DomainError("index range outside G_N");
  const DigitEvaluator ev(f, N, 1, strategy);
  return sum_range(ev, F, lo, hi);
}

CharSum twisted_sum(const ExpPoly& f, const Poly& m, unsigned N, const RunOptions& opts,
                    EvalStrategy strategy) {
  return weyl_sum(f.scaled(m), N, opts, strategy);
}

Orthogonality orthogonality(const KElem& alpha, unsigned N) {
  const FracOrd fo = frac_ord(alpha, -static_cast<long>(N));
  return fo.below_threshold ? Orthogonality::Full : Orthogonality::Zero;
}

}  // namespace fqlab
