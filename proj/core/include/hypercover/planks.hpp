#pragma once

#include "hypercover/pointset.hpp"

#include <optional>
#include <vector>

namespace hypercover {

// Canonical integer direction: primitive, first nonzero entry positive.
class Direction {
public:
    explicit Direction(std::vector<Int> v);
    static Direction from_kernel(const KernelVector& k);

    const std::vector<Int>& coords() const { return coords_; }
    std::size_t dimension() const { return coords_.size(); }
    const Int& squared_norm() const { return squared_norm_; }

    bool operator==(const Direction&) const = default;

private:
    std::vector<Int> coords_;
    Int squared_norm_;
};

// Distinct inner products of a point set along a direction, ascending, with
// the membership fibers.
struct ProjectionProfile {
    Direction direction;
    std::vector<Int> values;
    std::vector<std::vector<std::size_t>> members; // members[i] matches values[i]

    std::size_t m() const { return values.size(); }
};

ProjectionProfile project(const PointSet& s, const Direction& v);

// Largest squared Euclidean gap between consecutive projection values, exact.
// nullopt is the INFINITE sentinel: a single-value profile leaves the whole
// space empty on both sides.
std::optional<Rat> max_gap(const ProjectionProfile& p);

struct WidthResult {
    Rat squared;         // exact squared width of the convex hull
    Direction direction; // a direction attaining it
};

// Exact squared width for dimension <= 3 via facet normals of the difference
// body (cross products of pairwise differences in 3-D, rotated differences in
// 2-D). Dimension-deficient hulls have width 0. Dimension >= 4 is a capacity
// error; use width_upper_bound there.
WidthResult width_exact(const PointSet& s);

// Minimum extent over a sampled candidate set (coordinate axes and pairwise
// differences). Upper bound only; exact arithmetic per candidate.
WidthResult width_upper_bound(const PointSet& s);

struct GapBoundReport {
    std::size_t m = 0;
    bool vacuous = false; // m == 1: no gaps to check
    Rat gap_sq;
    Rat width_sq;
    Rat lhs; // gap_sq * (m - 1)^2
    bool pass = false;
};

// Checks gap^2 * (m-1)^2 >= width^2 for the profile of s along v: a set on m
// hyperplanes orthogonal to v must leave a gap of at least width/(m-1).
GapBoundReport check_gap_bound(const PointSet& s, const Direction& v);

struct MinProjection {
    Direction direction;
    std::size_t m = 0;
    CoveringCertificate certificate;
};

// Direction minimizing the number of distinct projection values; that number
// equals the covering number, and the certificate normal attains it.
MinProjection min_projection_direction(const PointSet& s);

struct PlankWitness {
    Direction direction;
    Int lo, hi;   // inner-product bounds of the widest point-free plank
    Rat plank_sq; // its squared Euclidean width
    Rat width_sq; // squared width of the body
    Rat bound_sq; // guaranteed lower bound on plank_sq
    std::size_t k = 0, n = 0;
    bool holds = false;
};

// Widest plank inside conv(body) whose interior misses every point of x:
// slabs between consecutive values of x projected along the min-projection
// direction, augmented with the body's own support values. The witness is
// guaranteed squared width >= w^2/(k-n+2)^2 when k >= n and >= w^2/4
// otherwise. x may be empty; every point of x must lie in conv(body).
PlankWitness plank_witness(const PointSet& body, const PointSet& x);

} // namespace hypercover
