#pragma once

// Independent cross-check oracles. Each one recomputes a quantity by a
// different algorithm than the library path it checks, so shared bugs are
// unlikely. Desk-scale inputs only.

#include "hypercover/graphs.hpp"
#include "hypercover/matrix.hpp"
#include "hypercover/pointset.hpp"

#include <optional>
#include <random>
#include <vector>

namespace hypercover::testing {

// Laplace cofactor expansion along the first row. Exponential; n <= 7 or so.
Int determinant_cofactor(const IntMatrix& m);

// Minimum number of distinct projection values over all directions, for
// dimension 2: candidate directions are the normals of all point pairs plus
// the coordinate axes, which is exhaustive in the plane.
std::size_t covering_oracle_2d(const PointSet& s);

// Shortest simple cycle by exhaustive path enumeration; nullopt when acyclic.
std::optional<std::size_t> girth_exhaustive(const BipartiteGraph& g);

// Decides ell-sparse sensing by searching for an integer null vector with at
// most ell nonzero entries, each bounded by the Hadamard bound on
// (ell-1)x(ell-1) minors. Sound and complete: a minimal dependency's
// primitive coefficients are cofactors, hence within the bound. Entries and
// the bound must stay far below 2^63; asserts at test scale.
bool sensing_oracle(const IntMatrix& a, std::size_t ell);

// Squared width of a planar point set: convex hull, then the least squared
// distance from an edge line to the farthest hull point (calipers fact).
Rat width_calipers_2d(const PointSet& s);

// --- deterministic random generators -------------------------------------

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                        long lo, long hi);

PointSet random_pointset(std::mt19937& rng, std::size_t dim, std::size_t k,
                         long lo, long hi);

BipartiteGraph random_graph(std::mt19937& rng, std::size_t m, std::size_t l,
                            std::size_t edge_count);

bool is_connected(const BipartiteGraph& g);

// Random integer matrix with determinant +-1, built from elementary shears,
// swaps, and sign flips.
IntMatrix random_unimodular(std::mt19937& rng, std::size_t n, std::size_t ops);

// p -> u * p + shift applied to every point.
PointSet apply_affine(const PointSet& s, const IntMatrix& u, const std::vector<Int>& shift);

} // namespace hypercover::testing
