#pragma once

// JSON and text helpers shared by the command-line tool and its tests.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fqlab/exppoly.hpp"
#include "fqlab/expsum.hpp"
#include "fqlab/exponents.hpp"
#include "fqlab/sieve.hpp"

namespace fqlab::io {

using json = nlohmann::json;

/// Reads an ExpPoly document:
///   {"field": "q=3", "terms": [{"exp": 3, "coeff": {...}}, ...]}
/// where coeff is one of
///   {"rat": ["num", "den"]}            exact rational
///   {"poly": "t^2 + 1"}                exact polynomial
///   {"series": "...", "floor": F}      truncated series (floor optional with an O-term)
///   {"kernel": {"seed": s, "floor": F}} seeded element with T(alpha) = 0
///   {"random": {"seed": s, "floor": F}} seeded element of T
/// Missing seeds fall back to `seed`; missing floors to `default_floor`.
ExpPoly exppoly_from_json(const json& doc, std::uint64_t seed, std::optional<long> default_floor);

/// Lowest residue floor any kernel/random coefficient must reach to serve
/// Weyl sums up to N with twists of degree < D.
long needed_floor(const json& doc, unsigned N, unsigned D, long slack = 8);

/// "1..12", "1,2,5", "8", or a mix like "1..3,7".
std::vector<unsigned> parse_list(const std::string& text);
ExponentSet parse_set(const std::string& text);

/// Rounds to 12 significant digits so emitted JSON never shows more.
double round12(double v);
/// "%.12g".
std::string fmt12(double v);

json charsum_json(const CharSum& cs);
json set_json(const ExponentSet& s);

/// DenseSet document: {"N": 8, "elems": ["t", "t^2+1"]} or
/// {"N": 8, "mod": "t", "residues": ["0"]}. N may be given by the caller instead.
DenseSet denseset_from_json(const FieldPtr& field, const json& doc, std::optional<unsigned> N);

}  // namespace fqlab::io
