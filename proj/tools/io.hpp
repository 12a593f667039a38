#pragma once

// Parsing of command-line values and JSON serialization of library types.

#include <optional>
#include <string>
#include <variant>

#include "json.hpp"

#include "superkit/components.hpp"
#include "superkit/repdecomp.hpp"
#include "superkit/suites.hpp"

namespace superkit::io {

using json = nlohmann::json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// "3", "-3/4", "0.25", "1e-3" parse exactly (decimal strings are exact rationals).
Q parse_rational(const std::string& s);
// Twice a non-negative half-integer: "1/2" -> 1, "3" -> 6, "1.5" -> 3.
int parse_twice_spin(const std::string& s);

// Momentum: JSON array [p0,p1,p2,p3] whose entries are numbers or [num,den]
// pairs, or a comma list "p0,p1,p2,p3" of rational/decimal strings.
struct ParsedMomentum {
  MomentumQ exact;  // exact value of the input text
  Momentum numeric;
};
ParsedMomentum parse_momentum(const std::string& s);

json to_json(const CQ& x);  // [re_num, re_den, im_num, im_den]
json to_json(const Multivector& m);
json to_json(const Report& r);
json to_json(const ledger::Snapshot& s);
json to_json(const SpinDecomposition& d);
template <class S>
json to_json(const PlaneWaveFn<S>& f);  // [[re, im, p0, p1, p2, p3, sign], ...], exact scalars as "n/d" strings
template <class S>
json to_json(const ChiralData<S>& c);
template <class S>
json to_json(const SuperFunction<S>& f);

// SuperFunction JSON: {"side": "position"|"momentum", "components": {"<I>|<J>": [[re,im,p0,p1,p2,p3,sign], ...]}}.
// Numbers are read exactly as binary doubles.
SuperFunction<CQ> superfunction_from_json(const json& j);

std::string text_table(const Report& r);

}  // namespace superkit::io
