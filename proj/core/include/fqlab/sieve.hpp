#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fqlab/enumerate.hpp"
#include "fqlab/expsum.hpp"
#include "fqlab/upoly.hpp"

namespace fqlab {

/// Finite subset of G_N.
struct DenseSet {
  unsigned N = 0;
  std::vector<Poly> elems;

  /// Explicit list; every element must have degree < N.
  static DenseSet from_list(unsigned N, std::vector<Poly> elems);
  /// { x in G_N : x mod g is one of residues }, in index order.
  static DenseSet residue_class(const FieldPtr& field, unsigned N, const Poly& g,
                                const std::vector<Poly>& residues, std::uint64_t budget = kDefaultBudget);
};

/// #(A intersect G_N) / q^N in lowest terms.
struct Density {
  std::uint64_t num = 0, den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Density&, const Density&) = default;
};
Density density(const DenseSet& A, unsigned N);

enum class GMode {
  Literal,  // product of every monic polynomial of degree < M
  Kernel,   // product of the distinct monic irreducibles of degree < M
};

struct GMBuild {
  GMode mode = GMode::Literal;
  Poly g;
  std::vector<Factor> factors;  // factorization of g
  std::optional<Poly> s;        // root of Phi mod g, reduced mod g
  std::string note;             // why s is missing
};
/// g_M and s_M. The root is assembled by CRT from the smallest root of Phi
/// modulo every prime-power factor. BudgetError when deg g exceeds max_degree.
GMBuild gM_build(const FieldPtr& field, const UPoly& phi, unsigned M, GMode mode = GMode::Literal,
                 std::uint64_t max_degree = 4096, std::uint64_t budget = kDefaultBudget);

/// Phi(g x + s) as a polynomial in x.
UPoly compose_affine(const UPoly& phi, const Poly& g, const Poly& s);

struct TMN {
  CharSum sum;
  double normalized = 0;
  Poly g, s;
};
/// (1/q^N) sum_{x in G_N} e(alpha Phi(g_M x + s_M)). HypothesisError when
/// Phi has no root mod g_M.
TMN t_mn(const UPoly& phi, const KElem& alpha, unsigned M, unsigned N, GMode mode = GMode::Literal,
         const RunOptions& opts = {});
/// Same for an already built g_M, s_M.
TMN t_mn(const UPoly& phi, const KElem& alpha, const GMBuild& gm, unsigned N, const RunOptions& opts = {});

struct Witness {
  Poly a, a2, x;  // a - a2 = Phi(x) != 0
};
/// Scans x in G_{x_bound} in index order and, for each nonzero Phi(x), the
/// elements a of A in their listed order; returns the first a with a - Phi(x)
/// in A.
std::optional<Witness> difference_search(const DenseSet& A, const UPoly& phi, unsigned x_bound,
                                         const RunOptions& opts = {});

}  // namespace fqlab
