#include "hn/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hn/family.hpp"
#include "hn/json_io.hpp"
#include "hn/oracle.hpp"

namespace hn {

namespace {

// Chain enumeration is exponential; it is only attempted up to this size.
constexpr std::size_t kOracleNodeLimit = 64;

struct Options {
  std::vector<std::string> types;
  std::string input;
  std::optional<std::int64_t> at;
  std::string svg;
  std::string tau;
  bool oracle = false;
};

void emit(std::ostream& os, const json& j) { os << j.dump(-1, ' ', true) << '\n'; }

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

// The file holding the command's single HN type (--type or --input).
const std::string& type_path(const Options& opt) {
  if (!opt.types.empty()) return opt.types.front();
  if (!opt.input.empty()) return opt.input;
  throw ParseError("an HN type file is required (--type PATH)");
}

int diagnostic(std::ostream& err, const std::string& kind, const std::string& message,
               json extra = json::object()) {
  extra["error"] = kind;
  extra["message"] = message;
  emit(err, extra);
  return kExitDiagnostic;
}

int cmd_validate_type(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto polys = parse_type_polys(read_json(type_path(opt)));
  if (auto e = diagnose_hn_type(polys)) {
    emit(out, {{"valid", false}, {"violation", e->kind()}, {"index", e->index()}});
    return diagnostic(err, e->kind(), e->what(), {{"index", e->index()}});
  }
  const HnType type = validate_hn_type(polys);
  emit(out, {{"valid", true}, {"length", type.length()}, {"type", to_json(type)}});
  return kExitOk;
}

int cmd_compare_types(const Options& opt, std::ostream& out, std::ostream&) {
  if (opt.types.size() != 2) throw ParseError("compare-types needs exactly two --type files");
  const HnType lhs = parse_type(read_json(opt.types[0]));
  const HnType rhs = parse_type(read_json(opt.types[1]));
  emit(out, {{"result", to_string(compare_types(lhs, rhs))}});
  return kExitOk;
}

int cmd_shift(const Options& opt, std::ostream& out, std::ostream& err) {
  const HnType type = parse_type(read_json(type_path(opt)));
  if (type.length() < 2) {
    return diagnostic(err, "ShiftUndefined", "quotient shift needs a type of length >= 2");
  }
  emit(out, {{"type", to_json(quotient_shift(type))}});
  return kExitOk;
}

// Smallest m >= 0 past which every pairwise order among the vertex and slope
// polynomials is already visible numerically.
std::int64_t default_slice(const HnPolygon& polygon) {
  std::vector<RatPoly> polys;
  for (const auto& v : polygon.vertices()) polys.push_back(v.f);
  for (std::size_t i = 0; i + 1 < polygon.vertices().size(); ++i) polys.push_back(polygon.slope(i));
  std::int64_t m = 0;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      if (polys[i] != polys[j]) m = std::max(m, stabilization_bound(polys[i], polys[j]));
    }
  }
  return m;
}

std::string polygon_svg(const std::vector<std::pair<Rational, Rational>>& pts, std::int64_t m) {
  Rational lo, hi;
  for (const auto& [a, v] : pts) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const Rational width = pts.back().first + Rational(2);
  const Rational height = hi - lo + Rational(2);
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"360\" viewBox=\"-1 "
      << (-hi - Rational(1)) << ' ' << width << ' ' << height
      << "\" preserveAspectRatio=\"none\">\n"
      << "  <title>HN polygon at lambda = " << m << "</title>\n"
      << "  <path d=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    svg << (i ? " L " : "M ") << pts[i].first << ' ' << -pts[i].second;
  }
  svg << "\" fill=\"none\" stroke=\"black\" vector-effect=\"non-scaling-stroke\"/>\n</svg>\n";
  return svg.str();
}

int cmd_polygon(const Options& opt, std::ostream& out, std::ostream&) {
  const HnType type = parse_type(read_json(type_path(opt)));
  const HnPolygon polygon = polygon_of(type);
  const std::int64_t m = opt.at ? *opt.at : default_slice(polygon);
  json vertices = json::array();
  std::vector<std::pair<Rational, Rational>> pts;
  for (const auto& v : polygon.vertices()) {
    const Rational value = v.f.evaluate(m);
    pts.emplace_back(v.a, value);
    vertices.push_back({{"r", *v.a.to_int64()}, {"f", to_json(v.f)}, {"value", to_json(value)}});
  }
  json result = {{"at", m}, {"vertices", vertices}};
  if (!opt.svg.empty()) {
    std::ofstream file(opt.svg);
    if (!file) throw ParseError("cannot write '" + opt.svg + "'");
    file << polygon_svg(pts, m);
    result["svg"] = opt.svg;
  }
  emit(out, result);
  return kExitOk;
}

std::optional<LatticeDiagnostic> lattice_problem(const SubobjectLattice& L) {
  if (auto d = validate_lattice(L)) return d;
  if (L.zero() == L.whole()) {
    return LatticeDiagnostic{LatticeViolation::EmptyObject, {}, "object is zero"};
  }
  return std::nullopt;
}

int lattice_diagnostic(std::ostream& err, const SubobjectLattice& L, const LatticeDiagnostic& d) {
  json witnesses = json::array();
  for (NodeId n : d.witnesses) witnesses.push_back(L.name(n));
  return diagnostic(err, std::string(to_string(d.violation)), d.message,
                    {{"witnesses", witnesses}});
}

// Chain search agrees with the filtration: exactly one admissible chain, equal to it.
json chain_oracle(const SubobjectLattice& L, const HnFiltration& filtration, bool& agree) {
  if (L.size() > kOracleNodeLimit) return "skipped";
  const auto chains = enumerate_hn_chains(L);
  bool match = chains.size() == 1 && chains.front().size() == filtration.steps.size();
  for (std::size_t i = 0; match && i < filtration.steps.size(); ++i) {
    match = L.name(chains.front()[i]) == filtration.steps[i];
  }
  agree = agree && match;
  return {{"chains", chains.size()}, {"unique_match", match}};
}

int cmd_hn(const Options& opt, std::ostream& out, std::ostream& err) {
  const json input = read_json(opt.input);
  std::optional<SplittingType> splitting;
  if (is_splitting(input)) splitting = parse_splitting(input);
  const SubobjectLattice L = splitting ? lattice_from_splitting(*splitting) : parse_lattice(input);
  if (!splitting || opt.oracle) {
    if (auto d = lattice_problem(L)) return lattice_diagnostic(err, L, *d);
  }

  const HnFiltration filtration = hn_filtration(L);
  const HnType type = filtration.type();
  json result = {{"filtration", to_json(filtration)},
                 {"type", to_json(type)},
                 {"length", filtration.length()},
                 {"semistable", filtration.length() == 1}};
  if (opt.oracle) {
    bool agree = true;
    json oracle = json::object();
    if (splitting) {
      const bool same = hn_closed_form(*splitting) == filtration;
      oracle["closed_form"] = same;
      agree = agree && same;
    }
    oracle["chain_search"] = chain_oracle(L, filtration, agree);
    result["oracle"] = oracle;
    if (!agree) {
      emit(out, result);
      return diagnostic(err, "OracleMismatch", "brute-force cross-check disagrees");
    }
  }
  emit(out, result);
  return kExitOk;
}

json witness_json(const FiniteSpace& space, const SemicontinuityViolation& v) {
  return {{"generic", space.name(v.generic)},
          {"special", space.name(v.special)},
          {"generic_type", to_json(v.generic_type)},
          {"special_type", to_json(v.special_type)}};
}

int semicontinuity_failure(std::ostream& out, std::ostream& err, const FiniteSpace& space,
                           const SemicontinuityViolation& v) {
  const json witness = witness_json(space, v);
  emit(out, {{"semicontinuous", false}, {"witness", witness}});
  return diagnostic(err, "SemicontinuityViolation",
                    "HN type is not upper semicontinuous along '" + space.name(v.generic) +
                        "' -> '" + space.name(v.special) + "'",
                    {{"witness", witness}});
}

int cmd_check_family(const Options& opt, std::ostream& out, std::ostream& err) {
  const SheafFamily family = parse_family(read_json(opt.input));
  if (auto v = check_semicontinuity(family)) {
    return semicontinuity_failure(out, err, family.space(), *v);
  }
  emit(out, {{"semicontinuous", true}});
  return kExitOk;
}

bool recursion_agrees(const SheafFamily& family, const Stratum& s) {
  try {
    return recursive_stratify(family, s.type) == s.points;
  } catch (const FamilyError& e) {
    if (e.violation() == FamilyViolation::InductionMismatch) return false;
    throw;
  }
}

int cmd_stratify(const Options& opt, std::ostream& out, std::ostream& err) {
  const SheafFamily family = parse_family(read_json(opt.input));
  const FiniteSpace& space = family.space();
  if (auto v = check_semicontinuity(family)) return semicontinuity_failure(out, err, space, *v);

  const Stratification st = stratify(family);
  bool recursive_ok = true;
  bool base_change_ok = true;
  bool oracle_ok = true;
  json strata = json::array();
  for (const auto& s : st.strata) {
    recursive_ok = recursive_ok && recursion_agrees(family, s);
    base_change_ok = base_change_ok && base_change_check(family, s.at_most) &&
                     base_change_check(family, ~s.points);
    strata.push_back({{"type", to_json(s.type)},
                      {"points", points_to_json(space, s.points)},
                      {"at_most", points_to_json(space, s.at_most)}});
  }
  json checks = {{"semicontinuity", true},
                 {"partition", st.partition},
                 {"open_below", st.open_below},
                 {"closed_within", st.closed_within},
                 {"recursive_matches_direct", recursive_ok},
                 {"base_change", base_change_ok}};
  if (opt.oracle) {
    for (PointId p = 0; p < family.size(); ++p) {
      chain_oracle(family.fiber(p), hn_filtration(family.fiber(p)), oracle_ok);
    }
    checks["fiber_oracle"] = oracle_ok;
  }
  json result = {{"strata", strata}, {"checks", checks}};

  if (!opt.tau.empty()) {
    const HnType tau = parse_type(read_json(opt.tau));
    const PointSet points = recursive_stratify(family, tau);
    json relative = nullptr;
    if (auto filtrations = relative_hn(family, tau)) {
      relative = json::object();
      for (PointId p = 0; p < family.size(); ++p) {
        relative[space.name(p)] = to_json((*filtrations)[p]);
      }
    }
    result["tau"] = {{"type", to_json(tau)},
                     {"points", points_to_json(space, points)},
                     {"relative_hn", relative}};
  }
  emit(out, result);
  if (!recursive_ok || !base_change_ok || !oracle_ok) {
    return diagnostic(err, "StratificationCheckFailed", "a stratification check failed");
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Harder-Narasimhan types, filtrations and stratifications", "hnctl"};
  app.require_subcommand(1, 1);
  Options opt;

  auto* validate = app.add_subcommand("validate-type", "Check that a sequence is an HN type");
  auto* compare = app.add_subcommand("compare-types", "Compare two HN types in the polygon order");
  auto* polygon = app.add_subcommand("polygon", "Emit the HN polygon of a type");
  auto* hn = app.add_subcommand("hn", "HN filtration of a lattice or splitting type");
  auto* strat = app.add_subcommand("stratify", "Stratify a family by HN type");
  auto* check = app.add_subcommand("check-family", "Check semicontinuity of a family");
  auto* shift = app.add_subcommand("shift", "Quotient shift (f2-f1, ..., fp-f1)");

  for (auto* sub : {validate, polygon, shift}) {
    sub->add_option("--type", opt.types, "HN type JSON file")->expected(1);
    sub->add_option("--input", opt.input, "HN type JSON file");
  }
  compare->add_option("--type", opt.types, "HN type JSON file (give twice)")->required();
  polygon->add_option("--at", opt.at, "Evaluate polynomials at this integer");
  polygon->add_option("--svg", opt.svg, "Also write a standalone SVG to this path");
  for (auto* sub : {hn, strat, check}) {
    sub->add_option("--input", opt.input, "Input JSON file")->required();
  }
  hn->add_flag("--oracle", opt.oracle, "Cross-check against brute force");
  strat->add_flag("--oracle", opt.oracle, "Cross-check every fiber against brute force");
  strat->add_option("--tau", opt.tau, "Also compute the stratum of this type recursively");

  std::vector<const char*> argv{"hnctl"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  try {
    if (validate->parsed()) return cmd_validate_type(opt, out, err);
    if (compare->parsed()) return cmd_compare_types(opt, out, err);
    if (polygon->parsed()) return cmd_polygon(opt, out, err);
    if (hn->parsed()) return cmd_hn(opt, out, err);
    if (strat->parsed()) return cmd_stratify(opt, out, err);
    if (check->parsed()) return cmd_check_family(opt, out, err);
    if (shift->parsed()) return cmd_shift(opt, out, err);
  } catch (const ParseError& e) {
    emit(err, {{"error", e.kind()}, {"message", e.what()}});
    return kExitMalformed;
  } catch (const json::exception& e) {
    emit(err, {{"error", "ParseError"}, {"message", e.what()}});
    return kExitMalformed;
  } catch (const HnTypeError& e) {
    return diagnostic(err, e.kind(), e.what(), {{"index", e.index()}});
  } catch (const Error& e) {
    return diagnostic(err, e.kind(), e.what());
  } catch (const std::invalid_argument& e) {
    emit(err, {{"error", "MalformedInput"}, {"message", e.what()}});
    return kExitMalformed;
  } catch (const std::out_of_range& e) {
    emit(err, {{"error", "MalformedInput"}, {"message", e.what()}});
    return kExitMalformed;
  } catch (const std::exception& e) {
    emit(err, {{"error", "InternalError"}, {"message", e.what()}});
    return kExitMalformed;
  }
  return kExitMalformed;
}

}  // namespace hn
