#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "hn/error.hpp"
#include "hn/hntype.hpp"
#include "hn/lattice.hpp"

namespace hn {

using PointId = std::size_t;
using PointSet = boost::dynamic_bitset<>;

enum class FamilyViolation {
  InvalidFiber,
  MixedDimension,
  NonConstantHilbertPolynomial,
  SemicontinuityRequired,
  InductionMismatch,
  FiberError,
};

std::string_view to_string(FamilyViolation v);

class FamilyError : public Error {
 public:
  FamilyError(FamilyViolation violation, const std::string& message);
  FamilyViolation violation() const noexcept { return violation_; }

 private:
  FamilyViolation violation_;
};

// Finite topological space given by its specialization preorder.
// A pair (g, s) means s lies in the closure of {g}, i.e. g specializes to s.
class FiniteSpace {
 public:
  FiniteSpace(std::vector<std::string> points,
              const std::vector<std::pair<PointId, PointId>>& specializations);

  std::size_t size() const { return names_.size(); }
  const std::string& name(PointId p) const { return names_.at(p); }
  std::optional<PointId> find(const std::string& name) const;

  // Reflexive-transitive: does `generic` specialize to `special`?
  bool specializes(PointId generic, PointId special) const { return spec_[generic][special]; }

  PointSet empty_set() const { return PointSet(size()); }
  PointSet full_set() const { return ~PointSet(size()); }

  // Open = closed under generization; closed = closed under specialization.
  bool is_open(const PointSet& u) const;
  bool is_closed(const PointSet& z) const;
  // `z` is closed in the subspace `ambient` (z must be a subset of ambient).
  bool is_closed_in(const PointSet& z, const PointSet& ambient) const;

  // Connected component index of every point (components numbered from 0 in
  // order of their smallest point).
  std::vector<std::size_t> components() const;

  // Subspace with the induced preorder; points keep their relative order.
  FiniteSpace restrict(const PointSet& subset) const;

 private:
  using Row = boost::dynamic_bitset<>;
  struct FromRelation {};
  FiniteSpace(FromRelation, std::vector<std::string> names, std::vector<Row> spec)
      : names_(std::move(names)), spec_(std::move(spec)) {}

  std::vector<std::string> names_;
  std::vector<Row> spec_;  // spec_[g][s] <=> g specializes to s
};

// Indices of the set bits, ascending.
std::vector<PointId> members(const PointSet& set);

// A lattice object over every point of a finite space. Construction checks
// that fibers are valid, nonzero and pure of one dimension, and that P(E_s)
// is constant on connected components.
class SheafFamily {
 public:
  SheafFamily(FiniteSpace space, std::vector<SubobjectLattice> fibers);

  const FiniteSpace& space() const { return space_; }
  const SubobjectLattice& fiber(PointId p) const { return fibers_.at(p); }
  std::size_t size() const { return fibers_.size(); }

 private:
  FiniteSpace space_;
  std::vector<SubobjectLattice> fibers_;
};

// s -> HN(E_s).
std::vector<HnType> hn_function(const SheafFamily& family);

struct SemicontinuityViolation {
  PointId generic;
  PointId special;
  HnType generic_type;
  HnType special_type;
};

// First specialization pair (g, s) with HN(E_g) not <= HN(E_s), if any.
std::optional<SemicontinuityViolation> check_semicontinuity(const SheafFamily& family);

struct Stratum {
  HnType type;
  PointSet points;   // S^tau
  PointSet at_most;  // S^{<= tau}
};

struct Stratification {
  std::vector<Stratum> strata;  // in order of first occurrence
  bool partition = false;
  bool open_below = false;     // every S^{<= tau} is open
  bool closed_within = false;  // every S^tau is closed in S^{<= tau}
};

// Throws FamilyError(SemicontinuityRequired) if the family is not
// semicontinuous or a topological assertion fails.
Stratification stratify(const SheafFamily& family);

// {s : HN(E_s) = tau}, computed directly.
PointSet level_set(const SheafFamily& family, const HnType& tau);

// The stratum of type tau built by induction on the length of tau: restrict
// to the points of S^{<= tau} with P(E_s) = f_p, keep those whose fiber has a
// subobject with P = f_1, pass to the quotient family there and recurse with
// the shifted type.
// Asserts agreement with level_set() (FamilyError(InductionMismatch)).
PointSet recursive_stratify(const SheafFamily& family, const HnType& tau);

// Per-point HN filtrations when the whole base lies in the stratum of tau.
std::optional<std::vector<HnFiltration>> relative_hn(const SheafFamily& family,
                                                     const HnType& tau);

SheafFamily restrict(const SheafFamily& family, const PointSet& subset);

// recursive_stratify(restrict(F, T), tau) == T ∩ recursive_stratify(F, tau).
bool base_change_check(const SheafFamily& family, const PointSet& subset, const HnType& tau);
// The same, for every type attained on the family.
bool base_change_check(const SheafFamily& family, const PointSet& subset);

// Distinct HN types in order of first occurrence.
std::vector<HnType> attained_types(const SheafFamily& family);

}  // namespace hn
