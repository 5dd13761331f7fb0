#pragma once

#include <map>
#include <string>
#include <vector>

#include "fqlab/options.hpp"
#include "fqlab/poly.hpp"

namespace fqlab {

/// Sparse polynomial Phi(u) = sum_r a_r u^r with a_r in F_q[t].
class UPoly {
 public:
  explicit UPoly(FieldPtr field) : field_(std::move(field)) {}

  const FieldPtr& field() const { return field_; }
  const std::map<unsigned, Poly>& terms() const { return terms_; }

  /// Sets a_r (zero removes the term).
  void set(unsigned r, Poly coeff);
  Poly coeff(unsigned r) const;
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  Poly eval(const Poly& x) const;
  /// Phi(x) mod g, reducing after every step.
  Poly eval_mod(const Poly& x, const Poly& g) const;

  std::string str() const;

 private:
  FieldPtr field_;
  std::map<unsigned, Poly> terms_;
};

/// Every x in G_{deg g} with Phi(x) = 0 (mod g), in index order.
std::vector<Poly> roots_mod(const UPoly& phi, const Poly& g, std::uint64_t budget = kDefaultBudget);

}  // namespace fqlab
