#include "io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "fqlab/errors.hpp"
#include "fqlab/parse.hpp"

namespace fqlab::io {

namespace {

KElem coeff_from_json(const FieldPtr& field, const json& c, std::uint64_t seed,
                      std::optional<long> default_floor) {
  if (!c.is_object()) throw ParseError("coefficient must be an object");
  if (c.contains("rat")) {
    const auto& r = c.at("rat");
    if (!r.is_array() || r.size() != 2) throw ParseError("\"rat\" takes [num, den]");
    return Rational(parse_poly(field, r[0].get<std::string>()), parse_poly(field, r[1].get<std::string>()));
  }
  if (c.contains("poly")) return KElem::poly(parse_poly(field, c.at("poly").get<std::string>()));
  if (c.contains("series")) {
    std::optional<long> fl;
    if (c.contains("floor")) fl = c.at("floor").get<long>();
    return parse_series(field, c.at("series").get<std::string>(), fl);
  }
  for (const char* kind : {"kernel", "random"}) {
    if (!c.contains(kind)) continue;
    const auto& k = c.at(kind);
    const std::uint64_t s = k.contains("seed") ? k.at("seed").get<std::uint64_t>() : seed;
    long fl = 0;
    if (k.contains("floor")) fl = k.at("floor").get<long>();
    else if (default_floor) fl = *default_floor;
    else throw ParseError(std::string("\"") + kind + "\" coefficient needs a floor");
    return std::string(kind) == "kernel" ? KElem(kernel_element(field, fl, s)) : KElem(random_series(field, fl, s));
  }
  throw ParseError("unknown coefficient kind");
}

}  // namespace

ExpPoly exppoly_from_json(const json& doc, std::uint64_t seed, std::optional<long> default_floor) {
  try {
    const FieldPtr field = make_field(parse_field_spec(doc.at("field").get<std::string>()));
    ExpPoly f(field);
    for (const auto& t : doc.at("terms")) {
      const long e = t.at("exp").get<long>();
      if (e < 0) throw ParseError("negative exponent in ExpPoly");
      f.set(static_cast<unsigned>(e), coeff_from_json(field, t.at("coeff"), seed, default_floor));
    }
    return f;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed ExpPoly document: ") + e.what());
  }
}

long needed_floor(const json& doc, unsigned N, unsigned D, long slack) {
  unsigned rmax = 0;
  if (doc.contains("terms"))
    for (const auto& t : doc.at("terms")) rmax = std::max(rmax, t.value("exp", 0u));
  const long n1 = N == 0 ? 0 : static_cast<long>(N) - 1;
  const long dshift = D == 0 ? 0 : static_cast<long>(D) - 1;
  return -(1 + static_cast<long>(rmax) * n1) - dshift - slack;
}

std::vector<unsigned> parse_list(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      const auto dots = item.find("..");
      if (dots == std::string::npos) {
        out.push_back(static_cast<unsigned>(std::stoul(item)));
      } else {
        const unsigned lo = static_cast<unsigned>(std::stoul(item.substr(0, dots)));
        const unsigned hi = static_cast<unsigned>(std::stoul(item.substr(dots + 2)));
        if (hi < lo) throw ParseError("empty range " + item);
        for (unsigned v = lo; v <= hi; ++v) out.push_back(v);
      }
    } catch (const std::logic_error&) {
      throw ParseError("bad list item \"" + item + "\"");
    }
  }
  if (out.empty()) throw ParseError("empty list");
  return out;
}

ExponentSet parse_set(const std::string& text) {
  ExponentSet out;
  for (unsigned v : parse_list(text)) {
    if (v == 0) throw ParseError("exponents must be positive");
    out.insert(v);
  }
  return out;
}

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double round12(double v) { return std::stod(fmt12(v)); }

json charsum_json(const CharSum& cs) {
  json j;
  j["counts"] = cs.counts;
  j["total"] = cs.total();
  j["zero"] = cs.is_zero();
  j["full"] = cs.is_full();
  j["magnitude"] = round12(cs.is_zero() ? 0.0 : cs.is_full() ? static_cast<double>(cs.total()) : cs.magnitude());
  j["normalized"] = round12(cs.normalized());
  return j;
}

json set_json(const ExponentSet& s) { return json(std::vector<unsigned>(s.begin(), s.end())); }

DenseSet denseset_from_json(const FieldPtr& field, const json& doc, std::optional<unsigned> N) {
  try {
    unsigned n = 0;
    if (N) n = *N;
    else if (doc.contains("N")) n = doc.at("N").get<unsigned>();
    else throw ParseError("DenseSet needs N");
    if (doc.contains("elems")) {
      std::vector<Poly> elems;
      for (const auto& e : doc.at("elems")) elems.push_back(parse_poly(field, e.get<std::string>()));
      return DenseSet::from_list(n, std::move(elems));
    }
    if (doc.contains("mod")) {
      std::vector<Poly> res;
      for (const auto& r : doc.at("residues")) res.push_back(parse_poly(field, r.get<std::string>()));
      return DenseSet::residue_class(field, n, parse_poly(field, doc.at("mod").get<std::string>()), res);
    }
    throw ParseError("DenseSet needs \"elems\" or \"mod\"");
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed DenseSet document: ") + e.what());
  }
}

}  // namespace fqlab::io
