#include "fqlab/exponents.hpp"

#include "fqlab/errors.hpp"

namespace fqlab {

namespace {

void check_p(unsigned p) {
  if (p < 2) throw DomainError("exponent calculus needs a prime p");
}

}  // namespace

bool preceq(unsigned p, unsigned j, unsigned r) {
  check_p(p);
  while (j > 0) {
    if (j % p > r % p) return false;
    j /= p;
    r /= p;
  }
  return true;
}

unsigned lucas_binom(unsigned p, unsigned r, unsigned j) {
  check_p(p);
  if (j > r) return 0;
  unsigned acc = 1;
  while (r > 0 || j > 0) {
    const unsigned a = r % p, b = j % p;
    if (b > a) return 0;
    // C(a, b) mod p for single digits
    unsigned long long c = 1;
    for (unsigned i = 0; i < b; ++i) c = c * (a - i) / (i + 1);
    acc = static_cast<unsigned>((acc * (c % p)) % p);
    r /= p;
    j /= p;
  }
  return acc;
}

ExponentSet shadow(unsigned p, const ExponentSet& K) {
  ExponentSet out;
  for (unsigned r : K)
    for (unsigned j = 1; j <= r; ++j)
      if (preceq(p, j, r)) out.insert(j);
  return out;
}

ExponentSet kstar(unsigned p, const ExponentSet& K) {
  ExponentSet out;
  if (K.empty()) return out;
  const ExponentSet S = shadow(p, K);
  const unsigned long long top = *S.rbegin();
  for (unsigned k : K) {
    if (k % p == 0) continue;
    bool ok = true;
    for (unsigned long long m = static_cast<unsigned long long>(k) * p; m <= top; m *= p)
      if (S.count(static_cast<unsigned>(m))) {
        ok = false;
        break;
      }
    if (ok) out.insert(k);
  }
  return out;
}

unsigned strip_p(unsigned p, unsigned n) {
  check_p(p);
  if (n == 0) return 0;
  while (n % p == 0) n /= p;
  return n;
}

ExponentSet sprime(unsigned p, const ExponentSet& K) {
  ExponentSet out;
  for (unsigned j : shadow(p, K)) out.insert(strip_p(p, j));
  return out;
}

ExponentSet ktilde(unsigned p, const ExponentSet& K) {
  ExponentSet out, cur = K;
  while (!cur.empty()) {
    const ExponentSet ks = kstar(p, cur);
    if (ks.empty()) break;
    for (unsigned k : ks) {
      out.insert(k);
      cur.erase(k);
    }
  }
  return out;
}

ExponentSet maximal_elements(unsigned p, const ExponentSet& K) {
  ExponentSet out;
  for (unsigned k : K) {
    bool maximal = true;
    for (unsigned j : K)
      if (j != k && preceq(p, k, j)) {
        maximal = false;
        break;
      }
    if (maximal) out.insert(k);
  }
  return out;
}

ExponentSet calI(unsigned p, const ExponentSet& K) {
  ExponentSet out;
  for (unsigned k : K) out.insert(strip_p(p, k));
  return out;
}

DerivedSets derive(unsigned p, const ExponentSet& K) {
  return {shadow(p, K), kstar(p, K), sprime(p, K), ktilde(p, K), maximal_elements(p, K), calI(p, K)};
}

}  // namespace fqlab
