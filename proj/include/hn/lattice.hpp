#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "hn/error.hpp"
#include "hn/hntype.hpp"
#include "hn/polynomial.hpp"

namespace hn {

using NodeId = std::size_t;

enum class LatticeViolation {
  NotAPartialOrder,
  NotBounded,
  MissingMeet,
  MissingJoin,
  NonzeroBottom,
  StrictMonotonicity,
  ModularAdditivity,
  Purity,
  EmptyObject,
  NonUniqueMaximizer,
  HypothesisViolation,
};

// "StrictMonotonicityViolation", "PurityViolation", "EmptyObject", ...
std::string_view to_string(LatticeViolation v);

class LatticeError : public Error {
 public:
  LatticeError(LatticeViolation violation, const std::string& message);
  LatticeViolation violation() const noexcept { return violation_; }

 private:
  LatticeViolation violation_;
};

// Finite lattice of subobjects of an object E, each node labelled with its
// Hilbert polynomial. Node names are unique; the order relation is stored as
// its reflexive-transitive closure.
class SubobjectLattice {
 public:
  enum class Relation {
    Covering,  // the given pairs generate the order
    Full,      // the given pairs already are the whole order (reflexive pairs optional)
  };

  // `leq` holds pairs (a, b) meaning a <= b. Throws LatticeError
  // (NotAPartialOrder) if the closure has a cycle or, for Relation::Full,
  // if the pairs are not transitively closed.
  SubobjectLattice(std::vector<std::string> names,
                   const std::vector<std::pair<NodeId, NodeId>>& leq,
                   std::vector<NumPoly> labels, Relation relation = Relation::Covering);

  std::size_t size() const { return names_.size(); }
  const std::string& name(NodeId n) const { return names_.at(n); }
  std::optional<NodeId> find(const std::string& name) const;
  const NumPoly& label(NodeId n) const { return labels_.at(n); }

  bool leq(NodeId a, NodeId b) const { return order_[a][b]; }
  bool less(NodeId a, NodeId b) const { return a != b && order_[a][b]; }

  std::optional<NodeId> bottom() const { return bottom_; }
  std::optional<NodeId> top() const { return top_; }
  // Throw LatticeError(NotBounded) if the lattice has no bottom / top.
  NodeId zero() const;
  NodeId whole() const;

  // Greatest lower bound / least upper bound, if it exists.
  std::optional<NodeId> meet(NodeId a, NodeId b) const;
  std::optional<NodeId> join(NodeId a, NodeId b) const;

  // Pairs (a, b) with a < b and nothing strictly between.
  std::vector<std::pair<NodeId, NodeId>> covering_pairs() const;

  // Sublattice on the interval [lo, top] with labels shifted by -P(lo).
  // Throws LatticeError(Purity) when the shifted nonzero labels have mixed degree.
  SubobjectLattice interval_quotient(NodeId lo) const;

 private:
  using Row = boost::dynamic_bitset<>;
  struct FromOrder {};
  SubobjectLattice(FromOrder, std::vector<std::string> names, std::vector<Row> order,
                   std::vector<NumPoly> labels);
  void locate_bounds();

  std::vector<std::string> names_;
  std::vector<Row> order_;  // order_[a][b] <=> a <= b
  std::vector<NumPoly> labels_;
  std::optional<NodeId> bottom_;
  std::optional<NodeId> top_;
};

struct LatticeDiagnostic {
  LatticeViolation violation;
  std::vector<NodeId> witnesses;
  std::string message;
};

// Exhaustive check of: bounded lattice, P(0) = 0 and strict monotonicity,
// modular additivity P(F v G) + P(F ^ G) = P(F) + P(G), and pure dimension.
std::optional<LatticeDiagnostic> validate_lattice(const SubobjectLattice& lattice);

// r(E) P(F) <= r(F) P(E) for every proper nonzero node F.
bool is_semistable(const SubobjectLattice& lattice);

// Nonzero node of maximal reduced polynomial P/r, of maximal rank among those.
NodeId max_destabilizer(const SubobjectLattice& lattice);

inline SubobjectLattice interval_quotient(const SubobjectLattice& lattice, NodeId lo) {
  return lattice.interval_quotient(lo);
}

// 0 = HN_0 < HN_1 < ... < HN_l = E, recorded by node name.
struct HnFiltration {
  std::vector<std::string> steps;  // includes the bottom and the top
  std::vector<NumPoly> graded;     // P(HN_i) - P(HN_{i-1}), i = 1..l

  std::size_t length() const { return graded.size(); }
  // (P(HN_1), ..., P(HN_l)), validated.
  HnType type() const;

  friend bool operator==(const HnFiltration&, const HnFiltration&) = default;
};

HnFiltration hn_filtration(const SubobjectLattice& lattice);
HnType hn_type(const SubobjectLattice& lattice);

// If a node F has P(F) = f_1, it is the maximal destabilizer (requires
// hn_type(L) <= tau, else LatticeError(HypothesisViolation)).
std::optional<NodeId> forced_first_step(const SubobjectLattice& lattice, const HnType& tau);

}  // namespace hn
