#include "hn/lattice.hpp"

#include <stdexcept>
#include <unordered_set>

namespace hn {

std::string_view to_string(LatticeViolation v) {
  switch (v) {
    case LatticeViolation::NotAPartialOrder: return "NotAPartialOrder";
    case LatticeViolation::NotBounded: return "NotBoundedViolation";
    case LatticeViolation::MissingMeet: return "MissingMeetViolation";
    case LatticeViolation::MissingJoin: return "MissingJoinViolation";
    case LatticeViolation::NonzeroBottom: return "NonzeroBottomViolation";
    case LatticeViolation::StrictMonotonicity: return "StrictMonotonicityViolation";
    case LatticeViolation::ModularAdditivity: return "ModularAdditivityViolation";
    case LatticeViolation::Purity: return "PurityViolation";
    case LatticeViolation::EmptyObject: return "EmptyObject";
    case LatticeViolation::NonUniqueMaximizer: return "NonUniqueMaximizer";
    case LatticeViolation::HypothesisViolation: return "HypothesisViolation";
  }
  return "Unknown";
}

LatticeError::LatticeError(LatticeViolation violation, const std::string& message)
    : Error(std::string(to_string(violation)), message), violation_(violation) {}

// ---------------------------------------------------------------------------
// SubobjectLattice

SubobjectLattice::SubobjectLattice(std::vector<std::string> names,
                                   const std::vector<std::pair<NodeId, NodeId>>& leq,
                                   std::vector<NumPoly> labels, Relation relation)
    : names_(std::move(names)), labels_(std::move(labels)) {
  const std::size_t n = names_.size();
  if (labels_.size() != n) throw std::invalid_argument("one label per node required");
  {
    std::unordered_set<std::string> seen;
    for (const auto& s : names_) {
      if (!seen.insert(s).second) throw std::invalid_argument("duplicate node name '" + s + "'");
    }
  }
  order_.assign(n, Row(n));
  for (NodeId i = 0; i < n; ++i) order_[i].set(i);
  for (const auto& [a, b] : leq) {
    if (a >= n || b >= n) throw std::out_of_range("order pair references unknown node");
    order_[a].set(b);
  }
  const std::vector<Row> given = order_;
  for (NodeId k = 0; k < n; ++k) {
    for (NodeId i = 0; i < n; ++i) {
      if (order_[i][k]) order_[i] |= order_[k];
    }
  }
  if (relation == Relation::Full && order_ != given) {
    throw LatticeError(LatticeViolation::NotAPartialOrder,
                       "relation flagged as full is not transitively closed");
  }
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      if (order_[i][j] && order_[j][i]) {
        throw LatticeError(LatticeViolation::NotAPartialOrder,
                           "nodes '" + names_[i] + "' and '" + names_[j] + "' form a cycle");
      }
    }
  }
  locate_bounds();
}

SubobjectLattice::SubobjectLattice(FromOrder, std::vector<std::string> names, std::vector<Row> order,
                                   std::vector<NumPoly> labels)
    : names_(std::move(names)), order_(std::move(order)), labels_(std::move(labels)) {
  locate_bounds();
}

void SubobjectLattice::locate_bounds() {
  const std::size_t n = names_.size();
  for (NodeId i = 0; i < n; ++i) {
    if (order_[i].all()) bottom_ = i;
    bool is_top = true;
    for (NodeId j = 0; j < n && is_top; ++j) is_top = order_[j][i];
    if (is_top) top_ = i;
  }
}

std::optional<NodeId> SubobjectLattice::find(const std::string& name) const {
  for (NodeId i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

NodeId SubobjectLattice::zero() const {
  if (!bottom_) throw LatticeError(LatticeViolation::NotBounded, "lattice has no bottom node");
  return *bottom_;
}

NodeId SubobjectLattice::whole() const {
  if (!top_) throw LatticeError(LatticeViolation::NotBounded, "lattice has no top node");
  return *top_;
}

std::optional<NodeId> SubobjectLattice::meet(NodeId a, NodeId b) const {
  std::optional<NodeId> best;
  for (NodeId c = 0; c < size(); ++c) {
    if (order_[c][a] && order_[c][b] && (!best || order_[*best][c])) best = c;
  }
  if (!best) return std::nullopt;
  for (NodeId c = 0; c < size(); ++c) {
    if (order_[c][a] && order_[c][b] && !order_[c][*best]) return std::nullopt;
  }
  return best;
}

std::optional<NodeId> SubobjectLattice::join(NodeId a, NodeId b) const {
  std::optional<NodeId> best;
  for (NodeId c = 0; c < size(); ++c) {
    if (order_[a][c] && order_[b][c] && (!best || order_[c][*best])) best = c;
  }
  if (!best) return std::nullopt;
  for (NodeId c = 0; c < size(); ++c) {
    if (order_[a][c] && order_[b][c] && !order_[*best][c]) return std::nullopt;
  }
  return best;
}

std::vector<std::pair<NodeId, NodeId>> SubobjectLattice::covering_pairs() const {
  const std::size_t n = size();
  std::vector<Row> below(n, Row(n));
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = 0; b < n; ++b) {
      if (order_[a][b]) below[b].set(a);
    }
  }
  std::vector<std::pair<NodeId, NodeId>> out;
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = 0; b < n; ++b) {
      if (!less(a, b)) continue;
      Row between = order_[a] & below[b];
      between.reset(a);
      between.reset(b);
      if (between.none()) out.emplace_back(a, b);
    }
  }
  return out;
}

SubobjectLattice SubobjectLattice::interval_quotient(NodeId lo) const {
  const std::size_t n = size();
  std::vector<NodeId> kept;
  for (NodeId g = 0; g < n; ++g) {
    if (order_[lo][g]) kept.push_back(g);
  }
  const std::size_t m = kept.size();
  std::vector<std::string> names;
  std::vector<NumPoly> labels;
  std::vector<Row> order(m, Row(m));
  names.reserve(m);
  labels.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    names.push_back(names_[kept[i]]);
    labels.push_back(labels_[kept[i]] - labels_[lo]);
    for (std::size_t j = 0; j < m; ++j) {
      if (order_[kept[i]][kept[j]]) order[i].set(j);
    }
  }
  std::optional<Degree> d;
  for (std::size_t i = 0; i < m; ++i) {
    if (kept[i] == lo) continue;
    if (!d) d = labels[i].degree();
    if (labels[i].degree() != *d || labels[i].is_zero()) {
      throw LatticeError(LatticeViolation::Purity,
                         "quotient by '" + names_[lo] + "' is not pure: node '" + names[i] +
                             "' has label " + labels[i].to_string());
    }
  }
  return SubobjectLattice(FromOrder{}, std::move(names), std::move(order), std::move(labels));
}

// ---------------------------------------------------------------------------
// Validation

std::optional<LatticeDiagnostic> validate_lattice(const SubobjectLattice& L) {
  const std::size_t n = L.size();
  if (!L.bottom() || !L.top()) {
    return LatticeDiagnostic{LatticeViolation::NotBounded, {},
                             "lattice lacks a bottom or a top node"};
  }
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      if (!L.meet(a, b)) {
        return LatticeDiagnostic{LatticeViolation::MissingMeet, {a, b},
                                 "'" + L.name(a) + "' and '" + L.name(b) + "' have no meet"};
      }
      if (!L.join(a, b)) {
        return LatticeDiagnostic{LatticeViolation::MissingJoin, {a, b},
                                 "'" + L.name(a) + "' and '" + L.name(b) + "' have no join"};
      }
    }
  }
  const NodeId zero = *L.bottom();
  if (!L.label(zero).is_zero()) {
    return LatticeDiagnostic{LatticeViolation::NonzeroBottom, {zero}, "P(0) must be 0"};
  }
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = 0; b < n; ++b) {
      if (L.less(a, b) && !(L.label(a) < L.label(b))) {
        return LatticeDiagnostic{LatticeViolation::StrictMonotonicity, {a, b},
                                 "'" + L.name(a) + "' < '" + L.name(b) +
                                     "' but P does not increase strictly"};
      }
    }
  }
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      const NodeId lo = *L.meet(a, b);
      const NodeId hi = *L.join(a, b);
      if (L.label(hi) + L.label(lo) != L.label(a) + L.label(b)) {
        return LatticeDiagnostic{LatticeViolation::ModularAdditivity, {a, b},
                                 "P(F v G) + P(F ^ G) != P(F) + P(G) for F = '" + L.name(a) +
                                     "', G = '" + L.name(b) + "'"};
      }
    }
  }
  const Degree d = L.label(*L.top()).degree();
  for (NodeId a = 0; a < n; ++a) {
    if (a != zero && L.label(a).degree() != d) {
      return LatticeDiagnostic{LatticeViolation::Purity, {a, *L.top()},
                               "node '" + L.name(a) + "' has degree different from E"};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Semistability and the HN filtration

namespace {

// Sign of P(a)/r(a) - P(b)/r(b) in the eventual order, ranks positive.
std::strong_ordering compare_reduced(const NumPoly& a, const NumPoly& b) {
  return Rational(b.rank()) * a.poly() <=> Rational(a.rank()) * b.poly();
}

NodeId require_nonzero(const SubobjectLattice& L) {
  const NodeId whole = L.whole();
  if (whole == L.zero()) throw LatticeError(LatticeViolation::EmptyObject, "object is zero");
  return whole;
}

// Every G with lo < G < hi satisfies the semistability inequality for hi/lo.
bool interval_semistable(const SubobjectLattice& L, NodeId lo, NodeId hi) {
  const NumPoly top = L.label(hi) - L.label(lo);
  for (NodeId g = 0; g < L.size(); ++g) {
    if (!L.less(lo, g) || !L.less(g, hi)) continue;
    if (compare_reduced(L.label(g) - L.label(lo), top) > 0) return false;
  }
  return true;
}

}  // namespace

bool is_semistable(const SubobjectLattice& L) {
  const NodeId whole = require_nonzero(L);
  return interval_semistable(L, L.zero(), whole);
}

NodeId max_destabilizer(const SubobjectLattice& L) {
  require_nonzero(L);
  const NodeId zero = L.zero();
  std::optional<NodeId> best;
  bool tied = false;
  for (NodeId f = 0; f < L.size(); ++f) {
    if (f == zero) continue;
    if (L.label(f).rank() <= 0) {
      throw LatticeError(LatticeViolation::StrictMonotonicity,
                         "nonzero node '" + L.name(f) + "' has nonpositive rank");
    }
    if (!best) {
      best = f;
      continue;
    }
    const auto c = compare_reduced(L.label(f), L.label(*best));
    const auto r = L.label(f).rank() <=> L.label(*best).rank();
    if (c > 0 || (c == 0 && r > 0)) {
      best = f;
      tied = false;
    } else if (c == 0 && r == 0) {
      tied = true;
    }
  }
  if (tied) {
    throw LatticeError(LatticeViolation::NonUniqueMaximizer,
                       "maximal destabilizer is not unique (near '" + L.name(*best) + "')");
  }
  return *best;
}

HnType HnFiltration::type() const {
  std::vector<NumPoly> cumulative;
  cumulative.reserve(graded.size());
  NumPoly acc;
  for (const auto& g : graded) {
    acc += g;
    cumulative.push_back(acc);
  }
  if (auto err = diagnose_hn_type(cumulative)) {
    throw InvariantViolation("HN type of a filtration is not in HNT: " + std::string(err->what()));
  }
  return validate_hn_type(std::move(cumulative));
}

HnFiltration hn_filtration(const SubobjectLattice& L) {
  require_nonzero(L);
  HnFiltration out;
  out.steps.push_back(L.name(L.zero()));
  SubobjectLattice current = L;
  for (;;) {
    const NodeId step = max_destabilizer(current);
    out.steps.push_back(current.name(step));
    out.graded.push_back(current.label(step));
    if (step == current.whole()) break;
    current = current.interval_quotient(step);
  }

  for (std::size_t i = 0; i + 1 < out.graded.size(); ++i) {
    if (compare_reduced(out.graded[i], out.graded[i + 1]) <= 0) {
      throw InvariantViolation("graded slopes of the HN filtration do not strictly decrease");
    }
  }
  for (std::size_t i = 0; i + 1 < out.steps.size(); ++i) {
    const NodeId lo = *L.find(out.steps[i]);
    const NodeId hi = *L.find(out.steps[i + 1]);
    if (!interval_semistable(L, lo, hi)) {
      throw InvariantViolation("graded piece " + std::to_string(i + 1) + " is not semistable");
    }
  }
  return out;
}

HnType hn_type(const SubobjectLattice& L) { return hn_filtration(L).type(); }

std::optional<NodeId> forced_first_step(const SubobjectLattice& L, const HnType& tau) {
  const HnType own = hn_type(L);
  if (!hnt_leq(own, tau)) {
    throw LatticeError(LatticeViolation::HypothesisViolation,
                       "HN type " + own.to_string() + " is not <= " + tau.to_string());
  }
  std::optional<NodeId> found;
  for (NodeId f = 0; f < L.size(); ++f) {
    if (L.label(f) != tau.front()) continue;
    if (found) {
      throw InvariantViolation("two subobjects with Hilbert polynomial " +
                               tau.front().to_string());
    }
    found = f;
  }
  if (found && *found != max_destabilizer(L)) {
    throw InvariantViolation("subobject with P = f_1 is not the maximal destabilizer");
  }
  return found;
}

}  // namespace hn
