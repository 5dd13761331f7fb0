#include "fqlab/upoly.hpp"

#include <sstream>

#include "fqlab/enumerate.hpp"
#include "fqlab/errors.hpp"

namespace fqlab {

void UPoly::set(unsigned r, Poly coeff) {
  if (coeff.is_zero()) terms_.erase(r);
  else terms_.insert_or_assign(r, std::move(coeff));
}

Poly UPoly::coeff(unsigned r) const {
  auto it = terms_.find(r);
  return it == terms_.end() ? Poly(field_) : it->second;
}

Poly UPoly::eval(const Poly& x) const {
  Poly acc(field_);
  for (const auto& [r, a] : terms_) acc += a * pow(x, r);
  return acc;
}

Poly UPoly::eval_mod(const Poly& x, const Poly& g) const {
  Poly acc(field_);
  for (const auto& [r, a] : terms_) acc = (acc + (a % g) * mod_pow(x, r, g)) % g;
  return acc;
}

std::string UPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")";
    if (it->first > 0) os << "*u^" << it->first;
  }
  return os.str();
}

std::vector<Poly> roots_mod(const UPoly& phi, const Poly& g, std::uint64_t budget) {
  if (g.is_zero()) throw DomainError("roots_mod: modulus is zero");
  const unsigned n = static_cast<unsigned>(g.degree().value());
  std::vector<Poly> out;
  for (const Poly& x : enumerate_GN(g.field(), n, budget))
    if (phi.eval_mod(x, g).is_zero()) out.push_back(x);
  return out;
}

}  // namespace fqlab
