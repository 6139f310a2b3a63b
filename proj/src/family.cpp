#include "hn/family.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace hn {

std::string_view to_string(FamilyViolation v) {
  switch (v) {
    case FamilyViolation::InvalidFiber: return "InvalidFiber";
    case FamilyViolation::MixedDimension: return "MixedDimension";
    case FamilyViolation::NonConstantHilbertPolynomial: return "NonConstantHilbertPolynomial";
    case FamilyViolation::SemicontinuityRequired: return "SemicontinuityRequired";
    case FamilyViolation::InductionMismatch: return "InductionMismatch";
    case FamilyViolation::FiberError: return "FiberError";
  }
  return "Unknown";
}

FamilyError::FamilyError(FamilyViolation violation, const std::string& message)
    : Error(std::string(to_string(violation)), message), violation_(violation) {}

// ---------------------------------------------------------------------------
// FiniteSpace

FiniteSpace::FiniteSpace(std::vector<std::string> points,
                         const std::vector<std::pair<PointId, PointId>>& specializations)
    : names_(std::move(points)) {
  const std::size_t n = names_.size();
  {
    std::unordered_set<std::string> seen;
    for (const auto& s : names_) {
      if (!seen.insert(s).second) throw std::invalid_argument("duplicate point '" + s + "'");
    }
  }
  spec_.assign(n, Row(n));
  for (PointId i = 0; i < n; ++i) spec_[i].set(i);
  for (const auto& [g, s] : specializations) {
    if (g >= n || s >= n) throw std::out_of_range("specialization references unknown point");
    spec_[g].set(s);
  }
  for (PointId k = 0; k < n; ++k) {
    for (PointId i = 0; i < n; ++i) {
      if (spec_[i][k]) spec_[i] |= spec_[k];
    }
  }
}

std::optional<PointId> FiniteSpace::find(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<PointId>(it - names_.begin());
}

bool FiniteSpace::is_open(const PointSet& u) const {
  for (PointId g = 0; g < size(); ++g) {
    if (!u[g] && spec_[g].intersects(u)) return false;
  }
  return true;
}

bool FiniteSpace::is_closed(const PointSet& z) const {
  for (PointId g = 0; g < size(); ++g) {
    if (z[g] && !spec_[g].is_subset_of(z)) return false;
  }
  return true;
}

bool FiniteSpace::is_closed_in(const PointSet& z, const PointSet& ambient) const {
  for (PointId g = 0; g < size(); ++g) {
    if (z[g] && !(spec_[g] & ambient).is_subset_of(z)) return false;
  }
  return true;
}

std::vector<std::size_t> FiniteSpace::components() const {
  const std::size_t n = size();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(n, unset);
  std::size_t next = 0;
  for (PointId start = 0; start < n; ++start) {
    if (comp[start] != unset) continue;
    std::vector<PointId> stack{start};
    comp[start] = next;
    while (!stack.empty()) {
      const PointId p = stack.back();
      stack.pop_back();
      for (PointId q = 0; q < n; ++q) {
        if (comp[q] == unset && (spec_[p][q] || spec_[q][p])) {
          comp[q] = next;
          stack.push_back(q);
        }
      }
    }
    ++next;
  }
  return comp;
}

FiniteSpace FiniteSpace::restrict(const PointSet& subset) const {
  const std::vector<PointId> kept = members(subset);
  std::vector<std::string> names;
  std::vector<Row> spec(kept.size(), Row(kept.size()));
  for (std::size_t i = 0; i < kept.size(); ++i) {
    names.push_back(names_[kept[i]]);
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (spec_[kept[i]][kept[j]]) spec[i].set(j);
    }
  }
  return FiniteSpace(FromRelation{}, std::move(names), std::move(spec));
}

std::vector<PointId> members(const PointSet& set) {
  std::vector<PointId> out;
  for (auto i = set.find_first(); i != PointSet::npos; i = set.find_next(i)) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------------------
// SheafFamily

SheafFamily::SheafFamily(FiniteSpace space, std::vector<SubobjectLattice> fibers)
    : space_(std::move(space)), fibers_(std::move(fibers)) {
  if (fibers_.size() != space_.size()) {
    throw FamilyError(FamilyViolation::InvalidFiber, "one fiber per point required");
  }
  std::optional<Degree> d;
  for (PointId p = 0; p < size(); ++p) {
    const auto& L = fibers_[p];
    if (auto diag = validate_lattice(L)) {
      throw FamilyError(FamilyViolation::InvalidFiber,
                        "fiber at '" + space_.name(p) + "': " + diag->message);
    }
    if (L.zero() == L.whole()) {
      throw FamilyError(FamilyViolation::InvalidFiber,
                        "fiber at '" + space_.name(p) + "' is zero");
    }
    const Degree dp = L.label(L.whole()).degree();
    if (d && dp != *d) {
      throw FamilyError(FamilyViolation::MixedDimension,
                        "fiber at '" + space_.name(p) + "' has a different dimension");
    }
    d = dp;
  }
  const auto comp = space_.components();
  for (PointId p = 0; p < size(); ++p) {
    for (PointId q = p + 1; q < size(); ++q) {
      if (comp[p] != comp[q]) continue;
      if (fibers_[p].label(fibers_[p].whole()) != fibers_[q].label(fibers_[q].whole())) {
        throw FamilyError(FamilyViolation::NonConstantHilbertPolynomial,
                          "P(E) differs between '" + space_.name(p) + "' and '" +
                              space_.name(q) + "' on one connected component");
      }
    }
  }
}

std::vector<HnType> hn_function(const SheafFamily& family) {
  std::vector<HnType> out;
  out.reserve(family.size());
  for (PointId p = 0; p < family.size(); ++p) {
    try {
      out.push_back(hn_type(family.fiber(p)));
    } catch (const Error& e) {
      throw FamilyError(FamilyViolation::FiberError,
                        "at point '" + family.space().name(p) + "': " + e.what());
    }
  }
  return out;
}

namespace {

std::optional<SemicontinuityViolation> first_violation(const FiniteSpace& space,
                                                       const std::vector<HnType>& types) {
  for (PointId g = 0; g < space.size(); ++g) {
    for (PointId s = 0; s < space.size(); ++s) {
      if (g == s || !space.specializes(g, s)) continue;
      if (!hnt_leq(types[g], types[s])) {
        return SemicontinuityViolation{g, s, types[g], types[s]};
      }
    }
  }
  return std::nullopt;
}

PointSet where_equal(const std::vector<HnType>& types, const HnType& tau) {
  PointSet out(types.size());
  for (PointId p = 0; p < types.size(); ++p) out[p] = types[p] == tau;
  return out;
}

}  // namespace

std::optional<SemicontinuityViolation> check_semicontinuity(const SheafFamily& family) {
  return first_violation(family.space(), hn_function(family));
}

std::vector<HnType> attained_types(const SheafFamily& family) {
  std::vector<HnType> out;
  for (auto& t : hn_function(family)) {
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(std::move(t));
  }
  return out;
}

Stratification stratify(const SheafFamily& family) {
  const FiniteSpace& space = family.space();
  const std::vector<HnType> types = hn_function(family);
  if (auto v = first_violation(space, types)) {
    throw FamilyError(FamilyViolation::SemicontinuityRequired,
                      "HN type drops from " + v->generic_type.to_string() + " at '" +
                          space.name(v->generic) + "' to " + v->special_type.to_string() +
                          " at '" + space.name(v->special) + "'");
  }

  Stratification out;
  for (PointId p = 0; p < types.size(); ++p) {
    const bool seen = std::any_of(out.strata.begin(), out.strata.end(),
                                  [&](const Stratum& s) { return s.type == types[p]; });
    if (!seen) out.strata.push_back({types[p], where_equal(types, types[p]), space.empty_set()});
  }
  PointSet cover = space.empty_set();
  out.partition = true;
  for (const auto& s : out.strata) {
    out.partition = out.partition && !cover.intersects(s.points);
    cover |= s.points;
  }
  out.partition = out.partition && cover == space.full_set();

  out.open_below = true;
  out.closed_within = true;
  for (auto& s : out.strata) {
    for (const auto& alpha : out.strata) {
      if (hnt_leq(alpha.type, s.type)) s.at_most |= alpha.points;
    }
    out.open_below = out.open_below && space.is_open(s.at_most);
    out.closed_within = out.closed_within && space.is_closed_in(s.points, s.at_most);
  }
  if (!out.partition || !out.open_below || !out.closed_within) {
    throw FamilyError(FamilyViolation::SemicontinuityRequired,
                      "stratification is not locally closed");
  }
  return out;
}

PointSet level_set(const SheafFamily& family, const HnType& tau) {
  return where_equal(hn_function(family), tau);
}

PointSet recursive_stratify(const SheafFamily& family, const HnType& tau) {
  const FiniteSpace& space = family.space();
  PointSet result = space.empty_set();

  if (tau.length() == 1) {
    for (PointId p = 0; p < family.size(); ++p) {
      const auto& L = family.fiber(p);
      result[p] = L.label(L.whole()) == tau.front() && is_semistable(L);
    }
  } else {
    const std::vector<HnType> types = hn_function(family);
    PointSet quot = space.empty_set();
    std::vector<SubobjectLattice> quotient_fibers;
    for (PointId p = 0; p < family.size(); ++p) {
      const auto& L = family.fiber(p);
      if (L.label(L.whole()) != tau.back()) continue;  // other Hilbert polynomial
      if (!hnt_leq(types[p], tau)) continue;            // outside S^{<= tau}
      if (auto step = forced_first_step(L, tau)) {
        quot.set(p);
        quotient_fibers.push_back(L.interval_quotient(*step));
      }
    }
    const SheafFamily quotient(space.restrict(quot), std::move(quotient_fibers));
    const PointSet inner = recursive_stratify(quotient, quotient_shift(tau));
    const std::vector<PointId> q_points = members(quot);
    for (PointId i = 0; i < q_points.size(); ++i) result[q_points[i]] = inner[i];
  }

  if (result != level_set(family, tau)) {
    throw FamilyError(FamilyViolation::InductionMismatch,
                      "inductive stratum of " + tau.to_string() + " differs from the level set");
  }
  return result;
}

std::optional<std::vector<HnFiltration>> relative_hn(const SheafFamily& family,
                                                     const HnType& tau) {
  if (recursive_stratify(family, tau) != family.space().full_set()) return std::nullopt;
  std::vector<HnFiltration> out;
  out.reserve(family.size());
  for (PointId p = 0; p < family.size(); ++p) out.push_back(hn_filtration(family.fiber(p)));
  return out;
}

SheafFamily restrict(const SheafFamily& family, const PointSet& subset) {
  std::vector<SubobjectLattice> fibers;
  for (PointId p : members(subset)) fibers.push_back(family.fiber(p));
  return SheafFamily(family.space().restrict(subset), std::move(fibers));
}

bool base_change_check(const SheafFamily& family, const PointSet& subset, const HnType& tau) {
  const PointSet upstairs = recursive_stratify(family, tau) & subset;
  const PointSet downstairs = recursive_stratify(restrict(family, subset), tau);
  const std::vector<PointId> kept = members(subset);
  PointSet pulled = family.space().empty_set();
  for (std::size_t i = 0; i < kept.size(); ++i) pulled[kept[i]] = downstairs[i];
  return pulled == upstairs;
}

bool base_change_check(const SheafFamily& family, const PointSet& subset) {
  for (const auto& tau : attained_types(family)) {
    if (!base_change_check(family, subset, tau)) return false;
  }
  return true;
}

}  // namespace hn
