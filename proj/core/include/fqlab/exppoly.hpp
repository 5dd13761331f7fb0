#pragma once

#include <map>
#include <string>
#include <vector>

#include "fqlab/kelem.hpp"
#include "fqlab/upoly.hpp"

namespace fqlab {

/// f(u) = sum_r alpha_r u^r with alpha_r in K_infinity; exponent 0 is the
/// optional constant term. Zero coefficients may be stored explicitly so that
/// an exponent belongs to the support while its coefficient vanishes.
class ExpPoly {
 public:
  explicit ExpPoly(FieldPtr field) : field_(std::move(field)) {}

  const FieldPtr& field() const { return field_; }
  const std::map<unsigned, KElem>& terms() const { return terms_; }

  void set(unsigned r, KElem alpha) { terms_.insert_or_assign(r, std::move(alpha)); }
  bool has(unsigned r) const { return terms_.count(r) != 0; }
  /// alpha_r, or exact zero when r is not stored.
  KElem coeff(unsigned r) const;

  /// Positive exponents carrying a term, ascending.
  std::vector<unsigned> support() const;
  /// Largest positive exponent (0 when there is none).
  unsigned max_exponent() const;

  /// m*f: every coefficient multiplied by the polynomial m.
  ExpPoly scaled(const Poly& m) const;
  /// alpha * Phi, for Phi with F_q[t] coefficients.
  static ExpPoly from_upoly(const UPoly& phi, const KElem& alpha);

  /// f(x) as an element of K_infinity with tracked precision.
  KElem eval(const Poly& x) const;

  /// Highest floor every coefficient must reach for the residues of f(x),
  /// x in G_N, to be known: -(1 + r_max (N - 1)) (or -1 if only a constant).
  long residue_floor(unsigned N) const;
  /// Floor used when generating pseudo-irrational coefficients for a run up to N:
  /// residue_floor(N) - slack.
  long default_floor(unsigned N, long slack = 8) const { return residue_floor(N) - slack; }

  std::string str() const;

 private:
  FieldPtr field_;
  std::map<unsigned, KElem> terms_;
};

}  // namespace fqlab
