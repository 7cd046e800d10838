#pragma once

#include "hypercover/graphs.hpp"
#include "hypercover/pointset.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace hypercover {

// Ordered bipartition (I, J) of the index set of a point set.
struct Partition {
    std::vector<std::size_t> I;
    std::vector<std::size_t> J;

    // Validates: both sides nonempty, disjoint, union covers 0..k-1.
    Partition(std::vector<std::size_t> i, std::vector<std::size_t> j, std::size_t k);
};

// Differences x_i - x_j with i drawn from I and j from J, one per edge of a
// bipartite pattern graph. Pair order follows the graph's edge order.
class DifferenceSet {
public:
    DifferenceSet(PointSet base, Partition partition,
                  std::vector<std::pair<std::size_t, std::size_t>> pairs);

    const PointSet& base() const { return base_; }
    const Partition& partition() const { return partition_; }
    // (i, j) are indices into the base point set.
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const { return pairs_; }
    const std::vector<std::vector<Int>>& vectors() const { return vectors_; }
    std::size_t size() const { return pairs_.size(); }

    // Distinct base-point indices touched by the pairs, ascending.
    std::vector<std::size_t> support() const;

private:
    PointSet base_;
    Partition partition_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
    std::vector<std::vector<Int>> vectors_;
};

// One difference per edge (a, b) of g: base point I[a] minus base point J[b].
DifferenceSet difference_set(const PointSet& s, const Partition& p,
                             const BipartiteGraph& g);

// n x |D| matrix whose r-th column is the r-th difference vector.
IntMatrix assemble_matrix(const DifferenceSet& d);

struct SensingReport {
    std::size_t n = 0;
    std::size_t d = 0;
    std::size_t ell = 0;
    bool verified = false;
    // First ell-subset of columns (lexicographic) found dependent.
    std::optional<std::vector<std::size_t>> witness;
    Int sup_norm;
    // Asymptotic comparison value attached by the pipeline; report only.
    std::optional<double> bound;
};

// Checks that every ell-subset of columns is linearly independent, i.e. the
// matrix distinguishes ell-sparse signals. Lexicographic enumeration; the
// first failure is returned as the witness.
SensingReport verify_sensing(const IntMatrix& a, std::size_t ell,
                             std::uint64_t budget = kDefaultBudget);

// Matrix whose columns are the nonzero points of s. The first point must be
// the origin; it is dropped.
IntMatrix point_column_matrix(const PointSet& s);

// End-to-end construction: S = build_sn(n), balanced bipartition (first
// ceil((n+2)/2) indices against the rest), complete bipartite pattern for
// ell <= 3 and greedy high-girth pattern for ell >= 4, then verification.
// The report carries edge_bound(n+2, ell) for comparison.
std::pair<IntMatrix, SensingReport> build_corollary_matrix(
    std::size_t n, std::size_t ell, std::uint64_t budget = kDefaultBudget);

// Exhaustive exact recovery of an integer signal with at most s nonzero
// entries, all bounded by B in absolute value, from y = A*x. Supports are
// enumerated by size then lexicographically; accepted solutions must satisfy
// the system exactly on every row. Distinct accepted solutions raise
// ambiguity_error (impossible when A verifies at 2s).
std::optional<std::vector<Int>> recover(const IntMatrix& a, const std::vector<Int>& y,
                                        std::size_t s, const Int& B,
                                        std::uint64_t budget = kDefaultBudget);

struct ForwardImplicationReport {
    std::size_t k = 0, n = 0, ell = 0, d = 0;
    std::size_t covering = 0;
    bool covering_hypothesis = false; // covering >= k - n + 1
    std::optional<std::size_t> girth_value;
    bool girth_hypothesis = false;    // girth > ell (acyclic counts)
    bool verified = false;            // conclusion: ell-sparse sensing
    bool implication_holds = false;
};

// Implication check: hard-to-cover base set plus high-girth pattern graph
// forces the assembled difference matrix to be an ell-sparse sensing matrix.
ForwardImplicationReport check_sensing_implication(const PointSet& s, const Partition& p,
                                                   const BipartiteGraph& g, std::size_t ell,
                                                   std::uint64_t budget = kDefaultBudget);

struct ConverseImplicationReport {
    std::size_t k = 0, n = 0;
    std::size_t partitions_checked = 0;
    std::size_t partitions_verified = 0;
    bool hypothesis_all_verified = false;
    std::size_t covering = 0;
    bool conclusion_holds = false;    // covering >= k - n + 1
    bool implication_holds = false;
};

// Converse check over every unordered bipartition of s (complete bipartite
// pattern, full difference set): if all assembled matrices sense n-sparse
// signals, the covering number of s must reach k - n + 1. Capacity-capped at
// |s| <= 10.
ConverseImplicationReport check_covering_implication(const PointSet& s,
                                                     std::uint64_t budget = kDefaultBudget);

} // namespace hypercover
