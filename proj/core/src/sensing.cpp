#include "hypercover/sensing.hpp"

#include "hypercover/linalg.hpp"

#include <algorithm>
#include <set>

namespace hypercover {

Partition::Partition(std::vector<std::size_t> i, std::vector<std::size_t> j,
                     std::size_t k)
    : I(std::move(i)), J(std::move(j)) {
    if (I.empty() || J.empty())
        throw usage_error("Partition: both sides must be nonempty");
    if (I.size() + J.size() != k)
        throw usage_error("Partition: sides must cover the index set");
    std::vector<bool> used(k, false);
    for (std::size_t idx : I) {
        if (idx >= k || used[idx])
            throw usage_error("Partition: invalid or repeated index");
        used[idx] = true;
    }
    for (std::size_t idx : J) {
        if (idx >= k || used[idx])
            throw usage_error("Partition: invalid or repeated index");
        used[idx] = true;
    }
}

DifferenceSet::DifferenceSet(PointSet base, Partition partition,
                             std::vector<std::pair<std::size_t, std::size_t>> pairs)
    : base_(std::move(base)), partition_(std::move(partition)), pairs_(std::move(pairs)) {
    const std::size_t n = base_.dimension();
    vectors_.reserve(pairs_.size());
    for (const auto& [i, j] : pairs_) {
        std::vector<Int> diff(n);
        for (std::size_t c = 0; c < n; ++c)
            diff[c] = base_.point(i)[c] - base_.point(j)[c];
        vectors_.push_back(std::move(diff));
    }
}

std::vector<std::size_t> DifferenceSet::support() const {
    std::set<std::size_t> seen;
    for (const auto& [i, j] : pairs_) {
        seen.insert(i);
        seen.insert(j);
    }
    return {seen.begin(), seen.end()};
}

DifferenceSet difference_set(const PointSet& s, const Partition& p,
                             const BipartiteGraph& g) {
    if (g.left_size() != p.I.size() || g.right_size() != p.J.size())
        throw usage_error("difference_set: graph sides must match the partition");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(g.edges().size());
    for (const auto& [a, b] : g.edges())
        pairs.emplace_back(p.I[a], p.J[b]);
    return DifferenceSet(s, p, std::move(pairs));
}

IntMatrix assemble_matrix(const DifferenceSet& d) {
    const std::size_t n = d.base().dimension();
    IntMatrix m(n, d.size());
    for (std::size_t c = 0; c < d.size(); ++c)
        for (std::size_t r = 0; r < n; ++r)
            m.at(r, c) = d.vectors()[c][r];
    return m;
}

namespace {

// Lexicographic successor over size-ell index subsets of 0..total-1.
bool next_subset(std::vector<std::size_t>& idx, std::size_t total) {
    const std::size_t ell = idx.size();
    std::size_t i = ell;
    while (i-- > 0) {
        if (idx[i] != i + total - ell) {
            ++idx[i];
            for (std::size_t j = i + 1; j < ell; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
        if (i == 0) break;
    }
    return false;
}

} // namespace

SensingReport verify_sensing(const IntMatrix& a, std::size_t ell, std::uint64_t budget) {
    if (ell < 1 || ell > a.cols())
        throw usage_error("verify_sensing: need 1 <= ell <= column count");
    if (binomial(a.cols(), ell) > budget)
        throw capacity_error("verify_sensing: subset count exceeds budget");

    SensingReport rep;
    rep.n = a.rows();
    rep.d = a.cols();
    rep.ell = ell;
    rep.verified = true;
    rep.sup_norm = a.sup_norm();

    std::vector<std::size_t> idx(ell);
    for (std::size_t i = 0; i < ell; ++i) idx[i] = i;
    do {
        if (!columns_independent(a, idx)) {
            rep.verified = false;
            rep.witness = idx;
            break;
        }
    } while (next_subset(idx, a.cols()));
    return rep;
}

IntMatrix point_column_matrix(const PointSet& s) {
    if (s.size() < 1)
        throw usage_error("point_column_matrix: empty point set");
    for (const Int& x : s.point(0))
        if (x != 0)
            throw usage_error("point_column_matrix: first point must be the origin");
    const std::size_t n = s.dimension();
    IntMatrix m(n, s.size() - 1);
    for (std::size_t c = 1; c < s.size(); ++c)
        for (std::size_t r = 0; r < n; ++r)
            m.at(r, c - 1) = s.point(c)[r];
    return m;
}

std::pair<IntMatrix, SensingReport> build_corollary_matrix(std::size_t n, std::size_t ell,
                                                           std::uint64_t budget) {
    if (n < 2)
        throw usage_error("build_corollary_matrix: n must be >= 2");
    if (ell < 1 || ell > n - 1)
        throw usage_error("build_corollary_matrix: need 1 <= ell <= n - 1");

    PointSet s = build_sn(n);
    const std::size_t k = s.size();
    const std::size_t half = (k + 1) / 2;
    std::vector<std::size_t> left(half), right(k - half);
    for (std::size_t i = 0; i < half; ++i) left[i] = i;
    for (std::size_t i = half; i < k; ++i) right[i - half] = i;
    Partition p(std::move(left), std::move(right), k);

    BipartiteGraph g = ell <= 3 ? complete_bipartite(half, k - half)
                                : greedy_girth_graph(half, k - half, ell);
    DifferenceSet d = difference_set(s, p, g);
    IntMatrix a = assemble_matrix(d);
    SensingReport rep = verify_sensing(a, ell, budget);
    rep.bound = edge_bound(k, ell);
    return {std::move(a), std::move(rep)};
}

std::optional<std::vector<Int>> recover(const IntMatrix& a, const std::vector<Int>& y,
                                        std::size_t s, const Int& B,
                                        std::uint64_t budget) {
    if (y.size() != a.rows())
        throw usage_error("recover: measurement length must match row count");
    if (B < 1)
        throw usage_error("recover: bound must be >= 1");
    const std::size_t d = a.cols();
    const std::size_t smax = std::min(s, d);
    Int supports = 0;
    for (std::size_t t = 0; t <= smax; ++t) supports += binomial(d, t);
    if (supports > budget)
        throw capacity_error("recover: support enumeration exceeds budget");

    std::vector<std::vector<Int>> found;
    auto consider = [&](const std::vector<std::size_t>& support) {
        IntMatrix sub = a.select_columns(support);
        auto z = solve_particular(sub, y);
        if (!z) return;
        std::vector<Int> x(d, Int(0));
        for (std::size_t i = 0; i < support.size(); ++i) {
            const Rat& zi = (*z)[i];
            if (denominator(zi) != 1) return;
            Int v = numerator(zi);
            if (abs(v) > B) return;
            x[support[i]] = v;
        }
        if (std::find(found.begin(), found.end(), x) == found.end())
            found.push_back(std::move(x));
    };

    for (std::size_t t = 0; t <= smax && found.size() < 2; ++t) {
        if (t == 0) {
            consider({});
            continue;
        }
        std::vector<std::size_t> idx(t);
        for (std::size_t i = 0; i < t; ++i) idx[i] = i;
        do {
            consider(idx);
        } while (found.size() < 2 && next_subset(idx, d));
    }

    if (found.size() >= 2)
        throw ambiguity_error("recover: two distinct sparse solutions fit the data");
    if (found.empty()) return std::nullopt;
    return found.front();
}

ForwardImplicationReport check_sensing_implication(const PointSet& s, const Partition& p,
                                                   const BipartiteGraph& g, std::size_t ell,
                                                   std::uint64_t budget) {
    ForwardImplicationReport rep;
    rep.k = s.size();
    rep.n = s.dimension();
    rep.ell = ell;

    auto [covering, cert] = covering_number(s);
    rep.covering = covering;
    const Int required = Int(rep.k) - Int(rep.n) + 1;
    rep.covering_hypothesis = (Int(covering) >= required);

    rep.girth_value = girth(g);
    rep.girth_hypothesis = !rep.girth_value || *rep.girth_value > ell;

    DifferenceSet d = difference_set(s, p, g);
    IntMatrix a = assemble_matrix(d);
    rep.d = a.cols();
    rep.verified = verify_sensing(a, std::min(ell, a.cols()), budget).verified;

    rep.implication_holds =
        !(rep.covering_hypothesis && rep.girth_hypothesis) || rep.verified;
    return rep;
}

ConverseImplicationReport check_covering_implication(const PointSet& s,
                                                     std::uint64_t budget) {
    const std::size_t k = s.size();
    if (k > 10)
        throw capacity_error("check_covering_implication: more than 10 points");
    if (k < 2)
        throw usage_error("check_covering_implication: need at least 2 points");
    const std::size_t n = s.dimension();

    ConverseImplicationReport rep;
    rep.k = k;
    rep.n = n;

    // Unordered bipartitions, index 0 pinned to the I side.
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << k); ++mask) {
        if (!(mask & 1)) continue;
        std::vector<std::size_t> I, J;
        for (std::size_t i = 0; i < k; ++i)
            (mask >> i & 1 ? I : J).push_back(i);
        Partition p(I, J, k);
        BipartiteGraph g = complete_bipartite(I.size(), J.size());
        IntMatrix a = assemble_matrix(difference_set(s, p, g));
        std::size_t ell = std::min(n, a.cols());
        ++rep.partitions_checked;
        if (verify_sensing(a, ell, budget).verified) ++rep.partitions_verified;
    }
    rep.hypothesis_all_verified = (rep.partitions_verified == rep.partitions_checked);

    rep.covering = covering_number(s).first;
    rep.conclusion_holds = (Int(rep.covering) >= Int(k) - Int(n) + 1);
    rep.implication_holds = !rep.hypothesis_all_verified || rep.conclusion_holds;
    return rep;
}

} // namespace hypercover
