#pragma once

#include "hypercover/errors.hpp"
#include "hypercover/numeric.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace hypercover {

// Simple bipartite graph. Vertices are 0-based on each side; serialization
// uses 1-based indices.
class BipartiteGraph {
public:
    using Edge = std::pair<std::size_t, std::size_t>; // (left, right)

    BipartiteGraph(std::size_t left, std::size_t right, std::vector<Edge> edges);

    std::size_t left_size() const { return left_; }
    std::size_t right_size() const { return right_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool operator==(const BipartiteGraph&) const = default;

private:
    std::size_t left_;
    std::size_t right_;
    std::vector<Edge> edges_;
};

// Length of the shortest cycle, or nullopt for an acyclic graph. Exact, via
// breadth-first search from every vertex. Always even on bipartite graphs.
std::optional<std::size_t> girth(const BipartiteGraph& g);

// K_{m,l} with edges in left-major lexicographic order.
BipartiteGraph complete_bipartite(std::size_t m, std::size_t l);

enum class EdgeOrder { left_major, right_major };

// Deterministic greedy scan over candidate edges in the given order, adding
// an edge exactly when the graph still has no cycle of length <= ell
// afterwards. The result has girth > ell and is maximal for that property.
BipartiteGraph greedy_girth_graph(std::size_t m, std::size_t l, std::size_t ell,
                                  EdgeOrder order = EdgeOrder::left_major);

// Asymptotic edge-count benchmark (k/2)^(1 + 2/(3*ell - 2)); report only,
// never used in correctness decisions.
double edge_bound(std::size_t k, std::size_t ell);

// True when every set of exactly ell edges touches more than ell distinct
// vertices, by direct enumeration. Serves as the independent oracle for the
// girth criterion; refuses when C(|edges|, ell) exceeds the budget.
bool support_check_bruteforce(const BipartiteGraph& g, std::size_t ell,
                              std::uint64_t budget = kDefaultBudget);

} // namespace hypercover
