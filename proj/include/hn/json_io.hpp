#pragma once

// JSON encodings shared by the CLI and the tests.
//
//   polynomial   ["2","2"]                 monomial basis, lowest degree first
//   HN type      [["2","1"],["2","2"]]     array of polynomials
//   polygon      [{"r":0,"f":[]}, ...]
//   lattice      {"nodes":[...], "leq":[[a,b],...], "P":{id: polynomial},
//                 "relation":"covering"|"full"}
//   splitting    {"degrees":[1,-1]}
//   family       {"points":[...], "specializes":[[generic,special],...],
//                 "fibers":{id: lattice-or-splitting}}
//
// Parsers throw ParseError on malformed input. Validation failures (an
// invalid HN type, an invalid lattice) surface as the owning module's errors.

#include <vector>

#include <json.hpp>

#include "hn/family.hpp"
#include "hn/hntype.hpp"
#include "hn/lattice.hpp"
#include "hn/polynomial.hpp"
#include "hn/rational.hpp"
#include "hn/splitting.hpp"

namespace hn {

using json = nlohmann::json;

json to_json(const Rational& q);
json to_json(const RatPoly& f);
json to_json(const HnType& type);
json to_json(const HnPolygon& polygon);
json to_json(const SubobjectLattice& lattice);
json to_json(const SplittingType& s);
json to_json(const HnFiltration& filtration);
json to_json(const SheafFamily& family);

Rational parse_rational(const json& j);
RatPoly parse_poly(const json& j);
NumPoly parse_numpoly(const json& j);  // ParseError if not numerical
std::vector<NumPoly> parse_type_polys(const json& j);
HnType parse_type(const json& j);  // HnTypeError if the sequence is not in HNT
SubobjectLattice parse_lattice(const json& j);
SplittingType parse_splitting(const json& j);
bool is_splitting(const json& j);
// Lattice or splitting type (converted through lattice_from_splitting).
SubobjectLattice parse_fiber(const json& j);
SheafFamily parse_family(const json& j);

// Point names of the set bits.
json points_to_json(const FiniteSpace& space, const PointSet& set);

}  // namespace hn
