#include "hn/json_io.hpp"

#include <map>

namespace hn {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string identifier(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  fail("identifiers must be strings or integers, got " + j.dump());
}

std::vector<std::pair<std::size_t, std::size_t>> index_pairs(
    const json& pairs, const std::map<std::string, std::size_t>& index, const char* what) {
  if (!pairs.is_array()) fail(std::string("'") + what + "' must be an array of pairs");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& pair : pairs) {
    if (!pair.is_array() || pair.size() != 2) fail(std::string("bad pair in '") + what + "'");
    const auto a = index.find(identifier(pair[0]));
    const auto b = index.find(identifier(pair[1]));
    if (a == index.end() || b == index.end()) {
      fail(std::string("'") + what + "' references an unknown id: " + pair.dump());
    }
    out.emplace_back(a->second, b->second);
  }
  return out;
}

std::pair<std::vector<std::string>, std::map<std::string, std::size_t>> id_list(
    const json& ids, const char* what) {
  if (!ids.is_array()) fail(std::string("'") + what + "' must be an array");
  std::vector<std::string> names;
  std::map<std::string, std::size_t> index;
  for (const auto& id : ids) {
    std::string name = identifier(id);
    if (!index.emplace(name, names.size()).second) {
      fail(std::string("duplicate id '") + name + "' in '" + what + "'");
    }
    names.push_back(std::move(name));
  }
  return {std::move(names), std::move(index)};
}

}  // namespace

json to_json(const Rational& q) { return q.to_string(); }

json to_json(const RatPoly& f) {
  json out = json::array();
  for (const auto& c : f.coefficients()) out.push_back(to_json(c));
  return out;
}

json to_json(const HnType& type) {
  json out = json::array();
  for (const auto& f : type) out.push_back(to_json(f.poly()));
  return out;
}

json to_json(const HnPolygon& polygon) {
  json out = json::array();
  for (const auto& v : polygon.vertices()) {
    out.push_back({{"r", *v.a.to_int64()}, {"f", to_json(v.f)}});
  }
  return out;
}

json to_json(const SubobjectLattice& lattice) {
  json nodes = json::array();
  json labels = json::object();
  for (NodeId n = 0; n < lattice.size(); ++n) {
    nodes.push_back(lattice.name(n));
    labels[lattice.name(n)] = to_json(lattice.label(n).poly());
  }
  json leq = json::array();
  for (const auto& [a, b] : lattice.covering_pairs()) {
    leq.push_back({lattice.name(a), lattice.name(b)});
  }
  return {{"nodes", nodes}, {"leq", leq}, {"P", labels}, {"relation", "covering"}};
}

json to_json(const SplittingType& s) { return {{"degrees", s.degrees()}}; }

json to_json(const HnFiltration& filtration) {
  json graded = json::array();
  for (const auto& g : filtration.graded) graded.push_back(to_json(g.poly()));
  return {{"steps", filtration.steps}, {"graded", graded}};
}

json to_json(const SheafFamily& family) {
  const FiniteSpace& space = family.space();
  json points = json::array();
  json specializes = json::array();
  json fibers = json::object();
  for (PointId g = 0; g < space.size(); ++g) {
    points.push_back(space.name(g));
    fibers[space.name(g)] = to_json(family.fiber(g));
    for (PointId s = 0; s < space.size(); ++s) {
      if (g != s && space.specializes(g, s)) specializes.push_back({space.name(g), space.name(s)});
    }
  }
  return {{"points", points}, {"specializes", specializes}, {"fibers", fibers}};
}

Rational parse_rational(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  fail("coefficient must be a string \"p/q\" or an integer, got " + j.dump());
}

RatPoly parse_poly(const json& j) {
  if (!j.is_array()) fail("polynomial must be an array of coefficients, got " + j.dump());
  std::vector<Rational> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(parse_rational(c));
  return RatPoly(std::move(coeffs));
}

NumPoly parse_numpoly(const json& j) {
  auto f = NumPoly::try_make(parse_poly(j));
  if (!f) fail("polynomial " + j.dump() + " is not a numerical polynomial");
  return *std::move(f);
}

std::vector<NumPoly> parse_type_polys(const json& j) {
  if (!j.is_array()) fail("HN type must be an array of polynomials");
  std::vector<NumPoly> polys;
  for (const auto& f : j) polys.push_back(parse_numpoly(f));
  return polys;
}

HnType parse_type(const json& j) { return validate_hn_type(parse_type_polys(j)); }

SubobjectLattice parse_lattice(const json& j) {
  auto [names, index] = id_list(member(j, "nodes"), "nodes");
  const auto pairs = index_pairs(member(j, "leq"), index, "leq");
  const json& labels = member(j, "P");
  if (!labels.is_object()) fail("'P' must be an object mapping node ids to polynomials");
  std::vector<NumPoly> polys;
  for (const auto& name : names) {
    if (!labels.contains(name)) fail("node '" + name + "' has no Hilbert polynomial");
    polys.push_back(parse_numpoly(labels.at(name)));
  }
  if (labels.size() != names.size()) fail("'P' labels an unknown node");
  auto relation = SubobjectLattice::Relation::Covering;
  if (j.contains("relation")) {
    const std::string r = j.at("relation").is_string() ? j.at("relation").get<std::string>() : "";
    if (r == "full") {
      relation = SubobjectLattice::Relation::Full;
    } else if (r != "covering") {
      fail("'relation' must be \"covering\" or \"full\"");
    }
  }
  return SubobjectLattice(std::move(names), pairs, std::move(polys), relation);
}

bool is_splitting(const json& j) { return j.is_object() && j.contains("degrees"); }

SplittingType parse_splitting(const json& j) {
  const json& degrees = member(j, "degrees");
  if (!degrees.is_array() || degrees.empty()) fail("'degrees' must be a nonempty array");
  std::vector<std::int64_t> out;
  for (const auto& d : degrees) {
    if (!d.is_number_integer()) fail("splitting degrees must be integers");
    out.push_back(d.get<std::int64_t>());
  }
  return SplittingType(std::move(out));
}

SubobjectLattice parse_fiber(const json& j) {
  if (is_splitting(j)) return lattice_from_splitting(parse_splitting(j));
  return parse_lattice(j);
}

SheafFamily parse_family(const json& j) {
  auto [names, index] = id_list(member(j, "points"), "points");
  const auto pairs = index_pairs(member(j, "specializes"), index, "specializes");
  const json& fibers = member(j, "fibers");
  if (!fibers.is_object()) fail("'fibers' must be an object mapping point ids to fibers");
  std::vector<SubobjectLattice> lattices;
  for (const auto& name : names) {
    if (!fibers.contains(name)) fail("point '" + name + "' has no fiber");
    lattices.push_back(parse_fiber(fibers.at(name)));
  }
  if (fibers.size() != names.size()) fail("'fibers' names an unknown point");
  return SheafFamily(FiniteSpace(std::move(names), pairs), std::move(lattices));
}

json points_to_json(const FiniteSpace& space, const PointSet& set) {
  json out = json::array();
  for (PointId p : members(set)) out.push_back(space.name(p));
  return out;
}

}  // namespace hn
