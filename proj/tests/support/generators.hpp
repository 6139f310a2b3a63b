#pragma once

// Random and fixed inputs shared by the unit and acceptance suites.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "hn/family.hpp"
#include "hn/hntype.hpp"
#include "hn/lattice.hpp"
#include "hn/splitting.hpp"

namespace hn::testing {

using Rng = std::mt19937_64;

// Up to `max_summands` degrees drawn uniformly from [lo, hi].
SplittingType random_splitting(Rng& rng, std::size_t max_summands = 8, int lo = -5, int hi = 5);

// HN type of a random splitting type, with length in [min_len, max_len].
HnType random_type(Rng& rng, std::size_t min_len, std::size_t max_len);

// Splitting type of the given rank and total degree (summands within [-8, 8]).
SplittingType random_splitting_with(Rng& rng, std::size_t rank, std::int64_t total_degree);

// Distributive lattice of down-sets of a random poset, optionally multiplied
// by a diamond M_k, with additive Hilbert polynomial labels of a random common
// degree. Always passes validate_lattice(); at most `max_nodes` nodes.
SubobjectLattice random_lattice(Rng& rng, std::size_t max_nodes = 64);

// Random finite space with points in [min_points, max_points]; fibers are
// split bundles chosen so that HN types only rise under specialization.
SheafFamily random_family(Rng& rng, std::size_t min_points, std::size_t max_points);

// Random subset of the points (each kept with probability 1/2).
PointSet random_subset(Rng& rng, std::size_t size);

// Two points, "generic" specializing to "special", with the given fibers.
SheafFamily two_point_family(const SplittingType& generic, const SplittingType& special);

// The classical jump: generic (0,0), special (1,-1).
SheafFamily jump_family();

// `points` points, discrete topology, every fiber `s`.
SheafFamily constant_family(const SplittingType& s, std::size_t points);

// Builds a NumPoly from integer coefficients, lowest degree first.
NumPoly poly(std::initializer_list<long long> coeffs);
HnType type_of(std::initializer_list<std::initializer_list<long long>> polys);

}  // namespace hn::testing
