#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "vvmacd/asym.hpp"
#include "vvmacd/identities.hpp"
#include "vvmacd/macdonald.hpp"
#include "vvmacd/pieri.hpp"
#include "vvmacd/ratqt.hpp"
#include "vvmacd/tableaux.hpp"
#include "vvmacd/tseries.hpp"
#include "vvmacd/velement.hpp"

namespace vvmacd {

// Insertion-ordered documents so a given object always serializes to the same
// bytes; every emitter below walks sorted containers.
using Json = nlohmann::ordered_json;

// Raised on malformed input documents; the message names the offending spot
// (row/column/field), suitable for verbatim display.
struct json_parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- emitters ----

// [[dq, dt, "coeff"], ...] in exponent order, big integers as decimal strings.
Json json_of(const IntPoly& p);
// {num, den}
Json json_of(const RatQT& f);
// {val, coeffs:[...]} with one rational (in q alone) per t-power.
Json json_of(const TSeries& s);
Json json_of(const Partition& p);  // part list
Json json_of(const Shape& s);      // row-length list
Json json_of(const Ryt& T);        // row-major value matrix
Json json_of(const Syt& s);        // row-major label matrix
Json json_of(const Psyt& tau);     // row-major matrix of [label, power]
// {base, rank, rows}: rows is the value matrix of the rank-sized restriction.
Json json_of(const AsymLabelling& T);
// [{alpha, tableau, coeff}, ...] ordered by exponent vector then tableau.
Json json_of(const VElement& v);
// {labelling, coefficients:[{tableau, coeff}, ...]}
Json json_of(const MacdonaldP& P);
// {source, r, entries:[{target, coeff}, ...]}
Json json_of(const PieriRow& row);
Json json_of(const StablePieriRow& row);
// {labelling, mode, order, verdict, lhs, rhs, term_count, elapsed_ms}
Json json_of(const IdentityReport& rep);

// ---- parsers ----

IntPoly intpoly_from_json(const Json& j);
RatQT ratqt_from_json(const Json& j);
TSeries tseries_from_json(const Json& j);
Partition partition_from_json(const Json& j);
// Value matrix -> filling; the matrix fixes the shape. Monotonicity problems
// are reported with their row and column before Ryt ever sees them.
Ryt ryt_from_json(const Json& j);
Syt syt_from_json(const Json& j);
Psyt psyt_from_json(const Json& j);
// Accepts {base, rows} with or without rank; rows as emitted (support of the
// top row first, then the base rows), implicit zeros beyond.
AsymLabelling asym_from_json(const Json& j);
VElement velement_from_json(const Json& j, const Shape& shape);
PieriRow pieri_row_from_json(const Json& j);
StablePieriRow stable_pieri_row_from_json(const Json& j);
IdentityReport identity_report_from_json(const Json& j);

// The labelling and coefficient table of an emitted Macdonald document (the
// assembled module element is not part of the wire format).
struct MacdonaldCoeffs {
  Ryt labelling;
  std::map<Psyt, RatQT> coefficients;
};
MacdonaldCoeffs macdonald_from_json(const Json& j);
Json json_of(const MacdonaldCoeffs& P);

}  // namespace vvmacd
