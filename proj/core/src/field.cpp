#include "fqlab/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "fqlab/errors.hpp"
#include "fqlab/options.hpp"

namespace fqlab {

namespace {

using PrimePoly = std::vector<unsigned>;  // low to high, over F_p

void trim(PrimePoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

unsigned inv_mod(unsigned a, unsigned p) {
  // p is prime and small; Fermat.
  unsigned long long r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<unsigned>(r);
}

// Remainder of f modulo g over F_p (g nonzero).
PrimePoly rem_prime(PrimePoly f, const PrimePoly& g, unsigned p) {
  trim(f);
  const unsigned lead_inv = inv_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const unsigned c = f.back() * lead_inv % p;
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i)
      f[shift + i] = (f[shift + i] + p - (c * g[i]) % p) % p;
    trim(f);
  }
  return f;
}

bool irreducible_prime(const PrimePoly& f, unsigned p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // all monic polynomials of degree d
    std::size_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::size_t idx = 0; idx < count; ++idx) {
      PrimePoly g(d + 1);
      std::size_t v = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = v % p;
        v /= p;
      }
      g[d] = 1;
      if (rem_prime(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

unsigned FieldSpec::q() const {
  unsigned r = 1;
  for (unsigned i = 0; i < m; ++i) r *= p;
  return r;
}

std::vector<unsigned> default_modulus(unsigned p, unsigned m) {
  if (m <= 1) return {};
  std::size_t count = 1;
  for (unsigned i = 0; i < m; ++i) count *= p;
  // The index's base-p digits are c_0..c_{m-1}; increasing index is the
  // lexicographic order read from the top coefficient down.
  for (std::size_t idx = 0; idx < count; ++idx) {
    PrimePoly f(m + 1);
    std::size_t v = idx;
    for (unsigned i = 0; i < m; ++i) {
      f[i] = v % p;
      v /= p;
    }
    f[m] = 1;
    if (f[0] != 0 && irreducible_prime(f, p)) return f;
  }
  throw DomainError("no irreducible polynomial found");  // unreachable for prime p
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  if (!is_prime(spec_.p)) throw DomainError("field characteristic must be prime");
  if (spec_.m == 0) throw DomainError("field extension degree must be positive");
  unsigned long long qq = 1;
  for (unsigned i = 0; i < spec_.m; ++i) qq *= spec_.p;
  if (qq > 256) throw DomainError("field size q must be at most 256");
  q_ = static_cast<unsigned>(qq);
  if (spec_.m == 1) {
    spec_.modulus.clear();
  } else {
    if (spec_.modulus.empty()) spec_.modulus = default_modulus(spec_.p, spec_.m);
    if (spec_.modulus.size() != spec_.m + 1 || spec_.modulus.back() != 1)
      throw DomainError("modulus must be monic of degree m");
    for (unsigned c : spec_.modulus)
      if (c >= spec_.p) throw DomainError("modulus coefficient out of range");
    if (!irreducible_prime(spec_.modulus, spec_.p))
      throw DomainError("modulus is not irreducible over F_p");
  }

  const unsigned p = spec_.p, m = spec_.m, q = q_;
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  trace_.resize(q);

  auto to_coords = [&](unsigned a) {
    PrimePoly c(m);
    for (unsigned i = 0; i < m; ++i) {
      c[i] = a % p;
      a /= p;
    }
    return c;
  };
  auto to_index = [&](const PrimePoly& c) {
    unsigned v = 0;
    for (unsigned i = m; i-- > 0;) v = v * p + (i < c.size() ? c[i] : 0);
    return v;
  };

  for (unsigned a = 0; a < q; ++a) {
    const PrimePoly ca = to_coords(a);
    PrimePoly cn(m);
    for (unsigned i = 0; i < m; ++i) cn[i] = (p - ca[i]) % p;
    neg_[a] = static_cast<Elem>(to_index(cn));
    for (unsigned b = 0; b < q; ++b) {
      const PrimePoly cb = to_coords(b);
      PrimePoly s(m);
      for (unsigned i = 0; i < m; ++i) s[i] = (ca[i] + cb[i]) % p;
      add_[a * q + b] = static_cast<Elem>(to_index(s));

      PrimePoly prod(2 * m, 0);
      for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
      if (m > 1) prod = rem_prime(prod, spec_.modulus, p);
      else trim(prod);
      mul_[a * q + b] = static_cast<Elem>(to_index(prod));
    }
  }
  for (unsigned a = 1; a < q; ++a)
    for (unsigned b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<Elem>(b);
  for (unsigned a = 0; a < q; ++a) {
    // a + a^p + ... + a^{p^{m-1}}
    Elem power = static_cast<Elem>(a), sum = 0;
    for (unsigned i = 0; i < m; ++i) {
      sum = add(sum, power);
      power = pow(power, p);
    }
    if (sum >= p) throw DomainError("trace left the prime field");  // would mean a bad table
    trace_[a] = sum;
  }
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw DomainError("inverse of zero in F_q");
  return inv_[a];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem Field::from_int(long long v) const {
  const long long p = spec_.p;
  long long r = v % p;
  if (r < 0) r += p;
  return static_cast<Elem>(r);
}

std::vector<unsigned> Field::coords(Elem a) const {
  std::vector<unsigned> c(spec_.m);
  unsigned v = a;
  for (unsigned i = 0; i < spec_.m; ++i) {
    c[i] = v % spec_.p;
    v /= spec_.p;
  }
  return c;
}

Elem Field::from_coords(std::span<const unsigned> c) const {
  if (c.size() > spec_.m) throw DomainError("too many coordinates for F_q element");
  unsigned v = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= spec_.p) throw DomainError("coordinate out of range");
    v = v * spec_.p + c[i];
  }
  return static_cast<Elem>(v);
}

namespace {

std::string prime_poly_string(const PrimePoly& f, char var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << f[i];
      continue;
    }
    if (f[i] != 1) os << f[i] << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

std::string Field::spec_string() const {
  std::ostringstream os;
  os << "q=" << spec_.p;
  if (spec_.m > 1) os << "^" << spec_.m << ",modulus=" << prime_poly_string(spec_.modulus, 'x');
  return os.str();
}

std::string Field::elem_string(Elem a) const {
  if (spec_.m == 1) return std::to_string(a);
  const auto c = coords(a);
  std::ostringstream os;
  os << "[";
  for (std::size_t i = c.size(); i-- > 0;) {
    os << c[i];
    if (i) os << ",";
  }
  os << "]";
  return os.str();
}

FieldPtr make_field(unsigned p, unsigned m) {
  FieldSpec s;
  s.p = p;
  s.m = m;
  return std::make_shared<const Field>(std::move(s));
}

FieldPtr make_field(FieldSpec spec) { return std::make_shared<const Field>(std::move(spec)); }

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

unsigned parse_uint(std::string_view s, std::string_view what) {
  if (s.empty()) throw ParseError(std::string("empty ") + std::string(what));
  unsigned long v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(std::string("bad ") + std::string(what) + ": '" + std::string(s) + "'");
    v = v * 10 + static_cast<unsigned>(c - '0');
    if (v > 1000000) throw ParseError(std::string(what) + " too large");
  }
  return static_cast<unsigned>(v);
}

// Polynomial over F_p in the variable x: "x^2+x+1", "x^2+2*x+2", "2x+1".
PrimePoly parse_prime_poly(std::string_view text, unsigned p) {
  const std::string s = strip(text);
  if (s.empty()) throw ParseError("empty modulus");
  PrimePoly f;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string term = s.substr(i, j - i);
    if (term.empty()) throw ParseError("bad modulus term in '" + s + "'");
    unsigned coeff = 1, exp = 0;
    const auto xpos = term.find('x');
    if (xpos == std::string::npos) {
      coeff = parse_uint(term, "modulus coefficient");
    } else {
      std::string c = term.substr(0, xpos);
      if (!c.empty() && c.back() == '*') c.pop_back();
      if (!c.empty()) coeff = parse_uint(c, "modulus coefficient");
      std::string rest = term.substr(xpos + 1);
      if (rest.empty()) exp = 1;
      else if (rest[0] == '^') exp = parse_uint(rest.substr(1), "modulus exponent");
      else throw ParseError("bad modulus term '" + term + "'");
    }
    if (f.size() <= exp) f.resize(exp + 1, 0);
    const long long v = (static_cast<long long>(f[exp]) + sign * static_cast<long long>(coeff)) % p;
    f[exp] = static_cast<unsigned>((v + p) % p);
    i = j;
  }
  trim(f);
  return f;
}

}  // namespace

FieldSpec parse_field_spec(std::string_view text) {
  std::string s(text);
  for (char& c : s)
    if (c == ';' || c == ',') c = ' ';
  std::istringstream is(s);
  std::string tok;
  FieldSpec spec;
  bool have_q = false;
  std::string modulus_text;
  while (is >> tok) {
    if (tok.rfind("q=", 0) == 0) {
      const std::string v = tok.substr(2);
      const auto caret = v.find('^');
      if (caret != std::string::npos) {
        spec.p = parse_uint(v.substr(0, caret), "field characteristic");
        spec.m = parse_uint(v.substr(caret + 1), "field degree");
      } else {
        const unsigned q = parse_uint(v, "field size");
        unsigned p = 0;
        for (unsigned d = 2; d <= q; ++d)
          if (q % d == 0) {
            p = d;
            break;
          }
        if (p == 0) throw ParseError("field size must be a prime power");
        unsigned m = 0, r = q;
        while (r % p == 0) {
          r /= p;
          ++m;
        }
        if (r != 1) throw ParseError("field size must be a prime power");
        spec.p = p;
        spec.m = m;
      }
      have_q = true;
    } else if (tok.rfind("modulus=", 0) == 0) {
      modulus_text = tok.substr(8);
    } else {
      throw ParseError("unrecognized field spec token '" + tok + "'");
    }
  }
  if (!have_q) throw ParseError("field spec needs q=...");
  if (!is_prime(spec.p)) throw ParseError("field characteristic must be prime");
  if (!modulus_text.empty()) {
    if (spec.m == 1) throw ParseError("modulus given for a prime field");
    spec.modulus = parse_prime_poly(modulus_text, spec.p);
  } else if (spec.m > 1) {
    spec.modulus = default_modulus(spec.p, spec.m);
  }
  return spec;
}

std::uint64_t checked_power(std::uint64_t q, std::uint64_t n, std::uint64_t budget) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (r > budget / q) throw BudgetError("enumeration of " + std::to_string(q) + "^" +
                                          std::to_string(n) + " points exceeds budget " +
                                          std::to_string(budget));
    r *= q;
  }
  if (r > budget) throw BudgetError("enumeration exceeds budget");
  return r;
}

}  // namespace fqlab
