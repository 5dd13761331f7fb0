#pragma once

#include <cstdint>
#include <vector>

#include "fqlab/options.hpp"
#include "fqlab/poly.hpp"

namespace fqlab {

/// |G_N| = q^N, checked against the budget.
std::uint64_t count_GN(const Field& field, unsigned N, std::uint64_t budget = kDefaultBudget);

/// All polynomials of degree < N in index order (constant term varies fastest).
std::vector<Poly> enumerate_GN(const FieldPtr& field, unsigned N, std::uint64_t budget = kDefaultBudget);

/// All monic polynomials of degree exactly d, in index order.
std::vector<Poly> monics(const FieldPtr& field, unsigned d, std::uint64_t budget = kDefaultBudget);

/// Trial division by every monic of degree <= deg/2.
bool is_irreducible(const Poly& f);

/// Monic irreducibles of degree M, in index order.
std::vector<Poly> irreducibles(const FieldPtr& field, unsigned M, std::uint64_t budget = kDefaultBudget);

struct Factor {
  Poly prime;  // monic irreducible
  unsigned exponent;
};
/// Factorization of a nonzero polynomial into monic irreducible powers (unit dropped),
/// by trial division. Sorted by (degree, index) of the prime.
std::vector<Factor> factor_trial(const Poly& f, std::uint64_t budget = kDefaultBudget);

}  // namespace fqlab
