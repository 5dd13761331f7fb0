#include "fqlab/parse.hpp"

#include <cctype>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fqlab/errors.hpp"

namespace fqlab {

namespace {

// (u exponent, t exponent) -> coefficient
using Sparse = std::map<std::pair<long, long>, Elem>;

class ExprParser {
 public:
  ExprParser(const FieldPtr& field, std::string_view text) : F_(field), s_(text) {}

  Sparse parse_all() {
    Sparse r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

  std::optional<long> o_exponent() const { return o_exp_; }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  long integer() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 100000000L) fail("integer too large");
      ++pos_;
    }
    return neg ? -v : v;
  }

  void add_into(Sparse& acc, const Sparse& b, bool subtract) const {
    for (const auto& [k, c] : b) {
      Elem& slot = acc[k];
      slot = subtract ? F_->sub(slot, c) : F_->add(slot, c);
      if (slot == 0) acc.erase(k);
    }
  }

  Sparse mul(const Sparse& a, const Sparse& b) const {
    Sparse r;
    for (const auto& [ka, ca] : a)
      for (const auto& [kb, cb] : b) {
        const std::pair<long, long> k{ka.first + kb.first, ka.second + kb.second};
        Elem& slot = r[k];
        slot = F_->add(slot, F_->mul(ca, cb));
        if (slot == 0) r.erase(k);
      }
    return r;
  }

  Sparse expr() {
    Sparse acc;
    bool subtract = false;
    if (accept('-')) subtract = true;
    else accept('+');
    while (true) {
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == 'O') {
        o_term();
      } else {
        add_into(acc, term(), subtract);
      }
      if (accept('+')) subtract = false;
      else if (accept('-')) subtract = true;
      else break;
    }
    return acc;
  }

  void o_term() {
    ++pos_;  // 'O'
    if (o_exp_) fail("more than one O-term");
    expect('(');
    const Sparse inner = expr();
    expect(')');
    if (inner.size() != 1 || inner.begin()->first.first != 0 || inner.begin()->second != 1)
      fail("O-term must be O(t^e)");
    o_exp_ = inner.begin()->first.second;
  }

  bool starts_atom() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 't' || c == 'u' || c == '[' || c == '(';
  }

  Sparse term() {
    Sparse acc = factor();
    while (true) {
      if (accept('*')) {
        acc = mul(acc, factor());
      } else if (starts_atom()) {
        acc = mul(acc, factor());
      } else {
        break;
      }
    }
    return acc;
  }

  Sparse factor() {
    Sparse base = atom();
    if (accept('^')) {
      const long e = integer();
      if (base.size() == 1 && base.begin()->second == 1) {
        // monomial: exponents scale, negative t powers allowed
        const auto [ue, te] = base.begin()->first;
        if (e < 0 && ue != 0) fail("negative power of u");
        return Sparse{{{ue * e, te * e}, 1}};
      }
      if (e < 0) fail("negative power of a sum");
      Sparse r{{{0, 0}, 1}};
      for (long i = 0; i < e; ++i) r = mul(r, base);
      return r;
    }
    return base;
  }

  Sparse atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Sparse r = expr();
      expect(')');
      return r;
    }
    if (c == 't') {
      ++pos_;
      return Sparse{{{0, 1}, 1}};
    }
    if (c == 'u') {
      ++pos_;
      return Sparse{{{1, 0}, 1}};
    }
    if (c == '[') {
      ++pos_;
      std::vector<unsigned> high_first;
      if (!peek(']')) {
        do {
          const long v = integer();
          high_first.push_back(static_cast<unsigned>(((v % static_cast<long>(F_->p())) + F_->p()) % F_->p()));
        } while (accept(','));
      }
      expect(']');
      if (high_first.size() > F_->m()) fail("coefficient vector longer than m");
      std::vector<unsigned> low_first(high_first.rbegin(), high_first.rend());
      const Elem e = F_->from_coords(low_first);
      return e == 0 ? Sparse{} : Sparse{{{0, 0}, e}};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const Elem e = F_->from_int(integer());
      return e == 0 ? Sparse{} : Sparse{{{0, 0}, e}};
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const FieldPtr& F_;
  std::string_view s_;
  std::size_t pos_ = 0;
  std::optional<long> o_exp_;
};

struct Parsed {
  Sparse terms;
  std::optional<long> o_exp;
};

Parsed parse_sparse(const FieldPtr& field, std::string_view text) {
  ExprParser p(field, text);
  Parsed r;
  r.terms = p.parse_all();
  r.o_exp = p.o_exponent();
  return r;
}

Poly poly_from(const FieldPtr& field, const Sparse& terms, std::string_view text) {
  long top = -1;
  for (const auto& [k, c] : terms) {
    if (k.first != 0) throw ParseError("unexpected u in '" + std::string(text) + "'");
    if (k.second < 0) throw ParseError("negative power of t in polynomial '" + std::string(text) + "'");
    top = std::max(top, k.second);
  }
  std::vector<Elem> c(static_cast<std::size_t>(top + 1), 0);
  for (const auto& [k, v] : terms) c[static_cast<std::size_t>(k.second)] = v;
  return Poly(field, std::move(c));
}

Series series_from(const FieldPtr& field, const Sparse& terms, long floor, std::string_view text) {
  long top = floor - 1;
  for (const auto& [k, c] : terms) {
    if (k.first != 0) throw ParseError("unexpected u in '" + std::string(text) + "'");
    top = std::max(top, k.second);
  }
  std::vector<Elem> d(static_cast<std::size_t>(std::max(0L, top - floor + 1)), 0);
  for (const auto& [k, v] : terms) {
    if (k.second < floor)
      throw ParseError("term t^" + std::to_string(k.second) + " lies below the precision floor in '" +
                       std::string(text) + "'");
    d[static_cast<std::size_t>(k.second - floor)] = v;
  }
  return Series(field, floor, std::move(d));
}

}  // namespace

Poly parse_poly(const FieldPtr& field, std::string_view text) {
  const Parsed p = parse_sparse(field, text);
  if (p.o_exp) throw ParseError("O-term in polynomial '" + std::string(text) + "'");
  return poly_from(field, p.terms, text);
}

Series parse_series(const FieldPtr& field, std::string_view text, std::optional<long> floor) {
  const Parsed p = parse_sparse(field, text);
  std::optional<long> f;
  if (p.o_exp) f = *p.o_exp + 1;
  if (floor) {
    if (f && *f != *floor)
      throw ParseError("O-term disagrees with floor " + std::to_string(*floor) + " in '" + std::string(text) + "'");
    f = floor;
  }
  if (!f) throw ParseError("series '" + std::string(text) + "' has no O-term and no floor");
  return series_from(field, p.terms, *f, text);
}

KElem parse_kelem(const FieldPtr& field, std::string_view text) {
  // top-level '/' separates numerator and denominator
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(' || text[i] == '[') ++depth;
    else if (text[i] == ')' || text[i] == ']') --depth;
    else if (text[i] == '/' && depth == 0) {
      const Poly num = parse_poly(field, text.substr(0, i));
      const Poly den = parse_poly(field, text.substr(i + 1));
      if (den.is_zero()) throw ParseError("zero denominator in '" + std::string(text) + "'");
      return Rational(num, den);
    }
  }
  const Parsed p = parse_sparse(field, text);
  if (p.o_exp) return series_from(field, p.terms, *p.o_exp + 1, text);
  // exact finite Laurent sum: num / t^k
  long low = 0;
  for (const auto& [k, c] : p.terms) {
    if (k.first != 0) throw ParseError("unexpected u in '" + std::string(text) + "'");
    low = std::min(low, k.second);
  }
  Sparse shifted;
  for (const auto& [k, c] : p.terms) shifted[{0, k.second - low}] = c;
  return Rational(poly_from(field, shifted, text), Poly::t_pow(field, static_cast<unsigned>(-low)));
}

UPoly parse_upoly(const FieldPtr& field, std::string_view text) {
  const Parsed p = parse_sparse(field, text);
  if (p.o_exp) throw ParseError("O-term in polynomial '" + std::string(text) + "'");
  std::map<long, Sparse> by_u;
  for (const auto& [k, c] : p.terms) {
    if (k.first < 0 || k.second < 0) throw ParseError("negative exponent in '" + std::string(text) + "'");
    by_u[k.first][{0, k.second}] = c;
  }
  UPoly out(field);
  for (const auto& [u, coeff] : by_u) out.set(static_cast<unsigned>(u), poly_from(field, coeff, text));
  return out;
}

}  // namespace fqlab
