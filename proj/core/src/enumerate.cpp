#include "fqlab/enumerate.hpp"

#include <algorithm>

#include "fqlab/errors.hpp"

namespace fqlab {

std::uint64_t count_GN(const Field& field, unsigned N, std::uint64_t budget) {
  return checked_power(field.q(), N, budget);
}

std::vector<Poly> enumerate_GN(const FieldPtr& field, unsigned N, std::uint64_t budget) {
  const std::uint64_t n = count_GN(*field, N, budget);
  std::vector<Poly> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(Poly::from_index(field, i));
  return out;
}

std::vector<Poly> monics(const FieldPtr& field, unsigned d, std::uint64_t budget) {
  const std::uint64_t n = checked_power(field->q(), d, budget);
  std::vector<Poly> out;
  out.reserve(n);
  const Poly lead = Poly::t_pow(field, d);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(Poly::from_index(field, i) + lead);
  return out;
}

bool is_irreducible(const Poly& f) {
  const Ord deg = f.degree();
  if (deg <= Ord(0)) return false;
  const long n = deg.value();
  for (long d = 1; d <= n / 2; ++d)
    for (const Poly& g : monics(f.field(), static_cast<unsigned>(d), ~std::uint64_t{0}))
      if ((f % g).is_zero()) return false;
  return true;
}

std::vector<Poly> irreducibles(const FieldPtr& field, unsigned M, std::uint64_t budget) {
  if (M == 0) throw DomainError("irreducibles: degree must be positive");
  std::vector<Poly> out;
  for (Poly& g : monics(field, M, budget))
    if (is_irreducible(g)) out.push_back(std::move(g));
  return out;
}

std::vector<Factor> factor_trial(const Poly& f, std::uint64_t budget) {
  if (f.is_zero()) throw DomainError("factor_trial of zero");
  std::vector<Factor> out;
  Poly rest = f.monic();
  for (unsigned d = 1; rest.degree() >= Ord(static_cast<long>(2 * d)); ++d) {
    for (const Poly& g : monics(f.field(), d, budget)) {
      unsigned e = 0;
      while (true) {
        DivMod qr = divmod(rest, g);
        if (!qr.rem.is_zero()) break;
        rest = std::move(qr.quot);
        ++e;
      }
      if (e) out.push_back({g, e});
    }
  }
  // No factor of degree <= deg(rest)/2 remains, so rest is 1 or irreducible.
  if (rest.degree() > Ord(0)) out.push_back({rest, 1});
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return a.prime < b.prime; });
  return out;
}

}  // namespace fqlab
