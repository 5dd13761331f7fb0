#pragma once

#include <cstdint>
#include <vector>

#include "fqlab/exponents.hpp"
#include "fqlab/field.hpp"
#include "fqlab/options.hpp"

namespace fqlab {

/// psi = #S(K)', phi = max S(K)', kappa = sum of S(K)', s_min = psi phi + psi.
struct ExponentProfile {
  unsigned psi = 0, phi = 0, kappa = 0, s_min = 0;
};
ExponentProfile profile(unsigned p, const ExponentSet& K);

/// J_s(S(K); N) by enumerating all 2s-tuples of G_N and testing the power sums
/// for every exponent of S(K). Used as an oracle; q^{2sN} must fit the budget.
std::uint64_t js_naive(const FieldPtr& field, const ExponentSet& K, unsigned s, unsigned N,
                       std::uint64_t budget = 1'000'000);

/// J_s(S(K); N) = sum_h b(h)^2, where b(h) counts s-tuples whose power sums
/// over S(K)' equal h. q^{sN} must fit opts.budget.
std::uint64_t js_histogram(const FieldPtr& field, const ExponentSet& K, unsigned s, unsigned N,
                           const RunOptions& opts = {});

struct GrowthRow {
  unsigned N = 0;
  std::uint64_t J = 0;
  double ratio = 0;  // J / q^{N(2s - kappa)}
};
std::vector<GrowthRow> growth_table(const FieldPtr& field, const ExponentSet& K, unsigned s,
                                    const std::vector<unsigned>& Ns, const RunOptions& opts = {});

}  // namespace fqlab
