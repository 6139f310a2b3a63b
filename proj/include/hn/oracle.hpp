#pragma once

#include <vector>

#include "hn/lattice.hpp"

namespace hn {

// Brute-force enumeration of every strictly increasing chain 0 < ... < E
// whose graded pieces are semistable with strictly decreasing reduced
// Hilbert polynomials. Works from the definition only; it shares no code
// path with hn_filtration(). Intended for small lattices.
std::vector<std::vector<NodeId>> enumerate_hn_chains(const SubobjectLattice& lattice);

}  // namespace hn
