#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "fqlab/kelem.hpp"
#include "fqlab/parse.hpp"
#include "fqlab/poly.hpp"

namespace fqlab::support {

inline Poly P(const FieldPtr& F, const std::string& text) { return parse_poly(F, text); }

inline KElem R(const FieldPtr& F, const std::string& num, const std::string& den) {
  return Rational(parse_poly(F, num), parse_poly(F, den));
}

/// Random polynomial of degree < n (possibly zero).
inline Poly random_poly(const FieldPtr& F, unsigned n, std::mt19937_64& rng) {
  std::vector<Elem> c(n);
  for (auto& e : c) e = static_cast<Elem>(rng() % F->q());
  return Poly(F, std::move(c));
}

/// Random polynomial of exact degree d.
inline Poly random_poly_deg(const FieldPtr& F, unsigned d, std::mt19937_64& rng) {
  std::vector<Elem> c(d + 1);
  for (auto& e : c) e = static_cast<Elem>(rng() % F->q());
  c[d] = static_cast<Elem>(1 + rng() % (F->q() - 1));
  return Poly(F, std::move(c));
}

/// Random monic polynomial of degree d.
inline Poly random_monic(const FieldPtr& F, unsigned d, std::mt19937_64& rng) {
  Poly p = random_poly(F, d, rng);
  return p + Poly::t_pow(F, d);
}

}  // namespace fqlab::support
