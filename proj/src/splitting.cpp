#include "hn/splitting.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hn {

namespace {

using Groups = std::vector<std::pair<std::int64_t, std::size_t>>;

std::string sub_sum_name(const Groups& groups, const std::vector<std::size_t>& counts) {
  std::string out;
  for (std::size_t j = 0; j < groups.size(); ++j) {
    for (std::size_t k = 0; k < counts[j]; ++k) {
      if (!out.empty()) out += "+";
      out += "O(" + std::to_string(groups[j].first) + ")";
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

SplittingType::SplittingType(std::vector<std::int64_t> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) throw std::invalid_argument("splitting type needs at least one summand");
  std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
}

std::int64_t SplittingType::total_degree() const {
  return std::accumulate(degrees_.begin(), degrees_.end(), std::int64_t{0});
}

Groups SplittingType::grouped() const {
  Groups out;
  for (std::int64_t a : degrees_) {
    if (!out.empty() && out.back().first == a) {
      ++out.back().second;
    } else {
      out.emplace_back(a, 1);
    }
  }
  return out;
}

NumPoly hilbert_poly_splitting(std::int64_t a) {
  return NumPoly::from_integers({static_cast<long long>(a + 1), 1});
}

SubobjectLattice lattice_from_splitting(const SplittingType& s) {
  const Groups groups = s.grouped();
  // Mixed-radix enumeration of the multiplicity vectors (k_1, ..., k_g).
  std::vector<std::size_t> radix(groups.size());
  std::size_t count = 1;
  for (std::size_t j = 0; j < groups.size(); ++j) {
    radix[j] = count;
    count *= groups[j].second + 1;
  }

  std::vector<std::string> names;
  std::vector<NumPoly> labels;
  std::vector<std::pair<NodeId, NodeId>> covers;
  names.reserve(count);
  labels.reserve(count);
  std::vector<std::size_t> counts(groups.size());
  for (NodeId id = 0; id < count; ++id) {
    NumPoly p;
    for (std::size_t j = 0; j < groups.size(); ++j) {
      counts[j] = (id / radix[j]) % (groups[j].second + 1);
      p += static_cast<std::int64_t>(counts[j]) * hilbert_poly_splitting(groups[j].first);
      if (counts[j] < groups[j].second) covers.emplace_back(id, id + radix[j]);
    }
    names.push_back(sub_sum_name(groups, counts));
    labels.push_back(std::move(p));
  }
  return SubobjectLattice(std::move(names), covers, std::move(labels));
}

HnFiltration hn_closed_form(const SplittingType& s) {
  const Groups groups = s.grouped();
  HnFiltration out;
  out.steps.push_back("0");
  std::vector<std::size_t> counts(groups.size(), 0);
  for (std::size_t j = 0; j < groups.size(); ++j) {
    counts[j] = groups[j].second;
    out.steps.push_back(sub_sum_name(groups, counts));
    out.graded.push_back(static_cast<std::int64_t>(groups[j].second) *
                         hilbert_poly_splitting(groups[j].first));
  }
  return out;
}

}  // namespace hn
