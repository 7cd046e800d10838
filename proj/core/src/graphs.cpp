#include "hypercover/graphs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>

namespace hypercover {

BipartiteGraph::BipartiteGraph(std::size_t left, std::size_t right,
                               std::vector<Edge> edges)
    : left_(left), right_(right), edges_(std::move(edges)) {
    std::set<Edge> seen;
    for (const Edge& e : edges_) {
        if (e.first >= left_ || e.second >= right_)
            throw usage_error("BipartiteGraph: edge endpoint out of range");
        if (!seen.insert(e).second)
            throw usage_error("BipartiteGraph: duplicate edge");
    }
}

namespace {

// Vertices 0..m-1 are the left side, m..m+l-1 the right side.
std::vector<std::vector<std::size_t>> adjacency(const BipartiteGraph& g) {
    std::vector<std::vector<std::size_t>> adj(g.left_size() + g.right_size());
    for (const auto& [a, b] : g.edges()) {
        adj[a].push_back(g.left_size() + b);
        adj[g.left_size() + b].push_back(a);
    }
    return adj;
}

// Hop distance from a left vertex to a right vertex; SIZE_MAX if unreachable.
std::size_t bfs_distance(const std::vector<std::vector<std::size_t>>& adj,
                         std::size_t from, std::size_t to) {
    std::vector<std::size_t> dist(adj.size(), std::numeric_limits<std::size_t>::max());
    std::queue<std::size_t> q;
    dist[from] = 0;
    q.push(from);
    while (!q.empty()) {
        std::size_t u = q.front();
        q.pop();
        if (u == to) return dist[u];
        for (std::size_t w : adj[u]) {
            if (dist[w] != std::numeric_limits<std::size_t>::max()) continue;
            dist[w] = dist[u] + 1;
            q.push(w);
        }
    }
    return dist[to];
}

} // namespace

std::optional<std::size_t> girth(const BipartiteGraph& g) {
    const auto adj = adjacency(g);
    const std::size_t nv = adj.size();
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::size_t best = none;
    for (std::size_t s = 0; s < nv; ++s) {
        std::vector<std::size_t> dist(nv, none), parent(nv, none);
        std::queue<std::size_t> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop();
            for (std::size_t w : adj[u]) {
                if (dist[w] == none) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (parent[u] != w && parent[w] != u) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best == none) return std::nullopt;
    return best;
}

BipartiteGraph complete_bipartite(std::size_t m, std::size_t l) {
    if (m < 1 || l < 1)
        throw usage_error("complete_bipartite: sides must be nonempty");
    std::vector<BipartiteGraph::Edge> edges;
    edges.reserve(m * l);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < l; ++j)
            edges.emplace_back(i, j);
    return BipartiteGraph(m, l, std::move(edges));
}

BipartiteGraph greedy_girth_graph(std::size_t m, std::size_t l, std::size_t ell,
                                  EdgeOrder order) {
    if (m < 1 || l < 1)
        throw usage_error("greedy_girth_graph: sides must be nonempty");
    if (ell < 1)
        throw usage_error("greedy_girth_graph: ell must be >= 1");

    std::vector<BipartiteGraph::Edge> candidates;
    candidates.reserve(m * l);
    if (order == EdgeOrder::left_major) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < l; ++j)
                candidates.emplace_back(i, j);
    } else {
        for (std::size_t j = 0; j < l; ++j)
            for (std::size_t i = 0; i < m; ++i)
                candidates.emplace_back(i, j);
    }

    std::vector<std::vector<std::size_t>> adj(m + l);
    std::vector<BipartiteGraph::Edge> chosen;
    for (const auto& [i, j] : candidates) {
        // A new edge (i, j) only creates cycles of length dist(i, j) + 1.
        std::size_t d = bfs_distance(adj, i, m + j);
        if (d != std::numeric_limits<std::size_t>::max() && d + 1 <= ell) continue;
        adj[i].push_back(m + j);
        adj[m + j].push_back(i);
        chosen.emplace_back(i, j);
    }
    return BipartiteGraph(m, l, std::move(chosen));
}

double edge_bound(std::size_t k, std::size_t ell) {
    if (k < 2)
        throw usage_error("edge_bound: k must be >= 2");
    if (ell < 1)
        throw usage_error("edge_bound: ell must be >= 1");
    const double exponent = 1.0 + 2.0 / (3.0 * static_cast<double>(ell) - 2.0);
    return std::pow(static_cast<double>(k) / 2.0, exponent);
}

bool support_check_bruteforce(const BipartiteGraph& g, std::size_t ell,
                              std::uint64_t budget) {
    if (ell < 1)
        throw usage_error("support_check_bruteforce: ell must be >= 1");
    const std::size_t e = g.edges().size();
    if (ell > e) return true;
    if (binomial(e, ell) > budget)
        throw capacity_error("support_check_bruteforce: subset count exceeds budget");

    std::vector<std::size_t> idx(ell);
    for (std::size_t i = 0; i < ell; ++i) idx[i] = i;
    std::vector<char> touched(g.left_size() + g.right_size());
    while (true) {
        std::fill(touched.begin(), touched.end(), 0);
        std::size_t count = 0;
        for (std::size_t i : idx) {
            const auto& [a, b] = g.edges()[i];
            if (!touched[a]) { touched[a] = 1; ++count; }
            if (!touched[g.left_size() + b]) { touched[g.left_size() + b] = 1; ++count; }
        }
        if (count <= ell) return false;

        // Next lexicographic combination.
        std::size_t i = ell;
        while (i-- > 0) {
            if (idx[i] != i + e - ell) {
                ++idx[i];
                for (std::size_t j = i + 1; j < ell; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return true;
        }
    }
}

} // namespace hypercover
