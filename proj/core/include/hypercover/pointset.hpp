#pragma once

#include "hypercover/linalg.hpp"
#include "hypercover/matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace hypercover {

// Finite set of pairwise distinct integer points in Z^n.
class PointSet {
public:
    PointSet(std::size_t dim, std::vector<std::vector<Int>> points);

    std::size_t dimension() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<Int>& point(std::size_t i) const { return points_[i]; }
    const std::vector<std::vector<Int>>& points() const { return points_; }

    bool operator==(const PointSet&) const = default;

private:
    std::size_t dim_;
    std::vector<std::vector<Int>> points_;
};

// The extremal family in Z^n: the origin, then
//   x_i = -e_{n-i+1} + e_{n-i+2} + ... + e_n   for i = 1..n,
//   x_{n+1} = (1, ..., 1).
// n + 2 points with coordinates in {-1, 0, 1}.
PointSet build_sn(std::size_t n);

// Certificate that a set lies on exactly t() parallel hyperplanes: an integer
// normal plus the fibers of the inner-product map along it.
struct CoveringCertificate {
    struct ValueClass {
        Int value;
        std::vector<std::size_t> members; // indices into the point set, ascending
    };

    KernelVector normal;
    std::vector<ValueClass> classes; // ascending by value

    std::size_t t() const { return classes.size(); }
};

// Re-derives the certificate facts from the set: canonical normal, classes
// partition the index set, values match the stated inner products and are
// strictly ascending.
bool certificate_valid(const PointSet& s, const CoveringCertificate& cert);

// Searches for a covering of s by at most t parallel hyperplanes. Partitions
// of the index set into at most t blocks are enumerated in restricted-growth
// lexicographic order; the first partition whose within-block difference
// vectors admit a nontrivial kernel yields the certificate, so the result is
// deterministic. Refuses |s| > 22 at t = 2 and |s| > 16 at t >= 3.
std::optional<CoveringCertificate> coverable_by(const PointSet& s, std::size_t t);

// Minimum number of parallel hyperplanes covering s, with certificate.
// Never exceeds max(1, |s| - dim + 1).
std::pair<std::size_t, CoveringCertificate> covering_number(const PointSet& s);

// True when every coordinate of every point satisfies |coordinate| <= T.
bool in_cube(const PointSet& s, const Int& T);

struct GridBoundReport {
    std::size_t k = 0;
    std::size_t n = 0;
    Int T;
    std::size_t covering = 0;
    bool lower_applicable = false; // covering == k - n + 1
    bool lower_holds = true;       // then k <= 2T + n
    bool upper_applicable = false; // covering == 2T + 1
    bool upper_holds = true;       // then k >= 2T + n
    bool pass = true;
};

// Checks both implications tying the covering number of a set inside the
// cube [-T, T]^n to its cardinality. Vacuous pass when neither hypothesis
// triggers.
GridBoundReport grid_bound_check(const PointSet& s, const Int& T);

} // namespace hypercover
