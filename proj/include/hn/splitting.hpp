#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hn/lattice.hpp"
#include "hn/polynomial.hpp"

namespace hn {

// Split bundle O(a_1) + ... + O(a_n) on the projective line, degrees kept
// in non-increasing order.
class SplittingType {
 public:
  explicit SplittingType(std::vector<std::int64_t> degrees);  // throws on empty

  const std::vector<std::int64_t>& degrees() const { return degrees_; }
  std::size_t rank() const { return degrees_.size(); }
  std::int64_t total_degree() const;

  // (degree, multiplicity), degrees strictly decreasing.
  std::vector<std::pair<std::int64_t, std::size_t>> grouped() const;

  friend bool operator==(const SplittingType&, const SplittingType&) = default;

 private:
  std::vector<std::int64_t> degrees_;
};

// Hilbert polynomial of O(a) on the projective line: λ + a + 1.
NumPoly hilbert_poly_splitting(std::int64_t a);

// Lattice of sub-sums: one node per sub-multiset of the degrees, ordered by
// inclusion. Node names are "0" for the empty sum and e.g. "O(2)+O(2)+O(-1)".
SubobjectLattice lattice_from_splitting(const SplittingType& s);

// HN filtration read off directly: summands grouped by equal degree, in
// decreasing order. Step names match lattice_from_splitting().
HnFiltration hn_closed_form(const SplittingType& s);

}  // namespace hn
