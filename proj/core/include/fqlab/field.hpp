#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fqlab {

/// Index of an element of F_q: the base-p digits of the index are the
/// coordinates in the power basis 1, x, ..., x^{m-1} (constant coordinate lowest).
/// For m = 1 the index is the residue itself.
using Elem = std::uint8_t;

/// Parameters of F_q = F_p[x]/(modulus).
struct FieldSpec {
  unsigned p = 2;
  unsigned m = 1;
  std::vector<unsigned> modulus;  // monic, degree m, low to high; empty when m == 1

  unsigned q() const;
};

/// Lexicographically smallest monic irreducible of degree m over F_p, comparing
/// coefficient vectors from the top degree down.
std::vector<unsigned> default_modulus(unsigned p, unsigned m);

bool is_prime(unsigned n);

/// F_q with precomputed operation tables (q <= 256).
class Field {
 public:
  explicit Field(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }
  unsigned p() const { return spec_.p; }
  unsigned m() const { return spec_.m; }
  unsigned q() const { return q_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  /// Throws DomainError for a == 0.
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;

  /// tr(a) = a + a^p + ... + a^{p^{m-1}}, returned as a residue in [0, p).
  unsigned trace(Elem a) const { return trace_[a]; }
  /// Exponent r of e_q(a) = exp(2 pi i r / p).
  unsigned char_value(Elem a) const { return trace_[a]; }

  /// Image of an integer under Z -> F_p -> F_q.
  Elem from_int(long long v) const;
  std::vector<unsigned> coords(Elem a) const;
  Elem from_coords(std::span<const unsigned> c) const;

  /// "q=3" or "q=2^2,modulus=x^2+x+1".
  std::string spec_string() const;
  /// Integer for m = 1, "[c_{m-1},...,c_0]" otherwise.
  std::string elem_string(Elem a) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.spec_.p == b.spec_.p && a.spec_.m == b.spec_.m && a.spec_.modulus == b.spec_.modulus;
  }

 private:
  FieldSpec spec_;
  unsigned q_;
  std::vector<Elem> add_, mul_, neg_, inv_;
  std::vector<unsigned> trace_;
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(unsigned p, unsigned m = 1);
FieldPtr make_field(FieldSpec spec);

/// Parses "q=p^m", "q=p", or "q=<prime power>", with an optional
/// ",modulus=<poly in x>" (separator ',', ';' or whitespace).
FieldSpec parse_field_spec(std::string_view text);

}  // namespace fqlab
