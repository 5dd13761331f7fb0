#pragma once

#include <cstdint>
#include <set>

namespace fqlab {

/// Finite set of positive exponents. The prime p is passed alongside.
using ExponentSet = std::set<unsigned>;

/// j <=_p r: every base-p digit of j is at most the matching digit of r.
bool preceq(unsigned p, unsigned j, unsigned r);

/// C(r, j) mod p by Lucas' theorem; 0 when j > r.
unsigned lucas_binom(unsigned p, unsigned r, unsigned j);

/// S(K) = { j >= 1 : j <=_p r for some r in K }.
ExponentSet shadow(unsigned p, const ExponentSet& K);

/// K* = { k in K : p does not divide k, p^v k not in S(K) for all v >= 1 }.
/// Only v with p^v k <= max S(K) can matter, so the test is exact.
ExponentSet kstar(unsigned p, const ExponentSet& K);

/// S(K)' = { i : p does not divide i, p^v i in S(K) for some v >= 0 }.
ExponentSet sprime(unsigned p, const ExponentSet& K);

/// Union of K_n^* over K_0 = K, K_n = K_{n-1} minus K_{n-1}^*, stopping at
/// the first empty K_n^*.
ExponentSet ktilde(unsigned p, const ExponentSet& K);

/// Elements of K maximal under <=_p.
ExponentSet maximal_elements(unsigned p, const ExponentSet& K);

/// { k : p does not divide k, p^v k in K for some v >= 0 }.
ExponentSet calI(unsigned p, const ExponentSet& K);

/// n with every factor of p removed.
unsigned strip_p(unsigned p, unsigned n);

struct DerivedSets {
  ExponentSet shadow, kstar, sprime, ktilde, maximal, cali;
};
DerivedSets derive(unsigned p, const ExponentSet& K);

}  // namespace fqlab
