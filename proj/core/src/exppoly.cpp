#include "fqlab/exppoly.hpp"

#include <sstream>

namespace fqlab {

KElem ExpPoly::coeff(unsigned r) const {
  auto it = terms_.find(r);
  return it == terms_.end() ? KElem::zero(field_) : it->second;
}

std::vector<unsigned> ExpPoly::support() const {
  std::vector<unsigned> out;
  for (const auto& [r, a] : terms_)
    if (r > 0) out.push_back(r);
  return out;
}

unsigned ExpPoly::max_exponent() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

ExpPoly ExpPoly::scaled(const Poly& m) const {
  ExpPoly out(field_);
  for (const auto& [r, a] : terms_) out.set(r, m * a);
  return out;
}

ExpPoly ExpPoly::from_upoly(const UPoly& phi, const KElem& alpha) {
  ExpPoly out(phi.field());
  for (const auto& [r, a] : phi.terms()) out.set(r, a * alpha);
  return out;
}

KElem ExpPoly::eval(const Poly& x) const {
  KElem acc = KElem::zero(field_);
  for (const auto& [r, a] : terms_) acc = acc + pow(x, r) * a;
  return acc;
}

long ExpPoly::residue_floor(unsigned N) const {
  const long n1 = N == 0 ? 0 : static_cast<long>(N) - 1;
  return -(1 + static_cast<long>(max_exponent()) * n1);
}

std::string ExpPoly::str() const {
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

}  // namespace fqlab
