#include "hypercover/planks.hpp"

#include "hypercover/linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

namespace hypercover {

Direction::Direction(std::vector<Int> v) {
    if (v.empty())
        throw usage_error("Direction: empty vector");
    if (!canonicalize_primitive(v))
        throw usage_error("Direction: zero vector");
    coords_ = std::move(v);
    squared_norm_ = dot(coords_, coords_);
}

Direction Direction::from_kernel(const KernelVector& k) {
    return Direction(k.coords());
}

ProjectionProfile project(const PointSet& s, const Direction& v) {
    if (s.size() == 0)
        throw usage_error("project: empty point set");
    if (v.dimension() != s.dimension())
        throw usage_error("project: direction dimension mismatch");
    std::map<Int, std::vector<std::size_t>> fibers;
    for (std::size_t i = 0; i < s.size(); ++i)
        fibers[dot(v.coords(), s.point(i))].push_back(i);
    ProjectionProfile p{v, {}, {}};
    for (auto& [value, members] : fibers) {
        p.values.push_back(value);
        p.members.push_back(std::move(members));
    }
    return p;
}

std::optional<Rat> max_gap(const ProjectionProfile& p) {
    if (p.m() <= 1) return std::nullopt;
    Rat best(0);
    for (std::size_t i = 0; i + 1 < p.values.size(); ++i) {
        Int delta = p.values[i + 1] - p.values[i];
        Rat gap(delta * delta, p.direction.squared_norm());
        if (gap > best) best = gap;
    }
    return best;
}

namespace {

std::vector<Int> point_diff(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return d;
}

std::vector<Int> cross(const std::vector<Int>& a, const std::vector<Int>& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

// Pairwise differences, deduplicated up to sign and scale.
std::set<std::vector<Int>> primitive_differences(const PointSet& s) {
    std::set<std::vector<Int>> diffs;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            std::vector<Int> d = point_diff(s.point(i), s.point(j));
            canonicalize_primitive(d);
            diffs.insert(std::move(d));
        }
    return diffs;
}

Rat extent_sq(const PointSet& s, const Direction& u) {
    Int lo = dot(u.coords(), s.point(0)), hi = lo;
    for (std::size_t i = 1; i < s.size(); ++i) {
        Int v = dot(u.coords(), s.point(i));
        if (v < lo) lo = v;
        if (v > hi) hi = v;
    }
    Int delta = hi - lo;
    return Rat(delta * delta, u.squared_norm());
}

WidthResult min_extent_over(const PointSet& s, const std::set<std::vector<Int>>& candidates) {
    std::optional<WidthResult> best;
    for (const auto& c : candidates) {
        Direction u{std::vector<Int>(c)};
        Rat e = extent_sq(s, u);
        if (!best || e < best->squared) best = WidthResult{e, u};
    }
    return *best; // nonempty: full-dimensional hulls always yield candidates
}

} // namespace

WidthResult width_exact(const PointSet& s) {
    const std::size_t n = s.dimension();
    if (s.size() == 0)
        throw usage_error("width_exact: empty point set");
    if (n > 3)
        throw capacity_error("width_exact: exact widths stop at dimension 3");

    // Dimension-deficient hulls are flat: width 0 along any normal of the
    // span of the differences.
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 1; i < s.size(); ++i)
        rows.push_back(point_diff(s.point(i), s.point(0)));
    IntMatrix diff = rows.empty() ? IntMatrix(0, n) : IntMatrix::from_rows(rows);
    if (auto ker = kernel_vector(diff))
        return {Rat(0), Direction::from_kernel(*ker)};

    std::set<std::vector<Int>> diffs = primitive_differences(s);
    std::set<std::vector<Int>> candidates;
    if (n == 1) {
        candidates.insert({Int(1)});
    } else if (n == 2) {
        for (const auto& d : diffs) {
            std::vector<Int> normal{-d[1], d[0]};
            canonicalize_primitive(normal);
            candidates.insert(std::move(normal));
        }
    } else {
        for (auto a = diffs.begin(); a != diffs.end(); ++a)
            for (auto b = std::next(a); b != diffs.end(); ++b) {
                std::vector<Int> normal = cross(*a, *b);
                if (canonicalize_primitive(normal))
                    candidates.insert(std::move(normal));
            }
    }
    return min_extent_over(s, candidates);
}

WidthResult width_upper_bound(const PointSet& s) {
    const std::size_t n = s.dimension();
    if (s.size() == 0)
        throw usage_error("width_upper_bound: empty point set");
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 1; i < s.size(); ++i)
        rows.push_back(point_diff(s.point(i), s.point(0)));
    IntMatrix diff = rows.empty() ? IntMatrix(0, n) : IntMatrix::from_rows(rows);
    if (auto ker = kernel_vector(diff))
        return {Rat(0), Direction::from_kernel(*ker)};

    std::set<std::vector<Int>> candidates = primitive_differences(s);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Int> axis(n, Int(0));
        axis[i] = 1;
        candidates.insert(std::move(axis));
    }
    return min_extent_over(s, candidates);
}

GapBoundReport check_gap_bound(const PointSet& s, const Direction& v) {
    GapBoundReport rep;
    ProjectionProfile p = project(s, v);
    rep.m = p.m();
    rep.width_sq = width_exact(s).squared;
    if (rep.m == 1) {
        rep.vacuous = true;
        rep.pass = true;
        return rep;
    }
    rep.gap_sq = *max_gap(p);
    Int f(rep.m - 1);
    rep.lhs = rep.gap_sq * Rat(f * f);
    rep.pass = rep.lhs >= rep.width_sq;
    return rep;
}

MinProjection min_projection_direction(const PointSet& s) {
    auto [t, cert] = covering_number(s);
    return {Direction::from_kernel(cert.normal), t, std::move(cert)};
}

namespace {

// Caratheodory membership: x is in conv(points) exactly when some affinely
// independent subset of at most n+1 points carries it with nonnegative
// barycentric coordinates.
bool in_hull(const PointSet& body, const std::vector<Int>& x) {
    const std::size_t n = body.dimension();
    const std::size_t k = body.size();
    std::vector<Int> rhs(n + 1);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = x[i];
    rhs[n] = 1;

    // Subsets in increasing size; sizes beyond n+1 are redundant.
    std::vector<std::size_t> stack;
    auto try_subset = [&](const std::vector<std::size_t>& pts) {
        IntMatrix m(n + 1, pts.size());
        for (std::size_t c = 0; c < pts.size(); ++c) {
            for (std::size_t r = 0; r < n; ++r) m.at(r, c) = body.point(pts[c])[r];
            m.at(n, c) = 1;
        }
        if (rank_exact(m) != pts.size()) return false; // affinely dependent
        auto lambda = solve_particular(m, rhs);
        if (!lambda) return false;
        for (const Rat& l : *lambda)
            if (l < 0) return false;
        return true;
    };

    std::function<bool(std::size_t, std::size_t)> rec =
        [&](std::size_t start, std::size_t remaining) -> bool {
        if (!stack.empty() && try_subset(stack)) return true;
        if (remaining == 0) return false;
        for (std::size_t i = start; i < k; ++i) {
            stack.push_back(i);
            if (rec(i + 1, remaining - 1)) return true;
            stack.pop_back();
        }
        return false;
    };
    return rec(0, std::min(k, n + 1));
}

} // namespace

PlankWitness plank_witness(const PointSet& body, const PointSet& x) {
    const std::size_t n = body.dimension();
    if (x.size() > 0 && x.dimension() != n)
        throw usage_error("plank_witness: dimension mismatch");
    if (n > 3)
        throw capacity_error("plank_witness: exact widths stop at dimension 3");
    for (const auto& p : x.points())
        if (!in_hull(body, p))
            throw usage_error("plank_witness: point outside the body");

    WidthResult w = width_exact(body);
    const std::size_t k = x.size();

    if (k == 0) {
        Int lo = dot(w.direction.coords(), body.point(0)), hi = lo;
        for (std::size_t i = 1; i < body.size(); ++i) {
            Int v = dot(w.direction.coords(), body.point(i));
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        Rat bound = w.squared / 4;
        return {w.direction, lo, hi, w.squared, w.squared, bound, 0, n,
                w.squared >= bound};
    }

    MinProjection mp = min_projection_direction(x);
    const Direction& u = mp.direction;

    Int lo = dot(u.coords(), body.point(0)), hi = lo;
    for (std::size_t i = 1; i < body.size(); ++i) {
        Int v = dot(u.coords(), body.point(i));
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    std::set<Int> cuts{lo, hi};
    for (const auto& p : x.points()) cuts.insert(dot(u.coords(), p));

    std::vector<Int> vals(cuts.begin(), cuts.end());
    Int best_delta = 0, best_lo = vals.front(), best_hi = vals.front();
    for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
        Int delta = vals[i + 1] - vals[i];
        if (delta > best_delta) {
            best_delta = delta;
            best_lo = vals[i];
            best_hi = vals[i + 1];
        }
    }

    PlankWitness rep{u,
                     best_lo,
                     best_hi,
                     Rat(best_delta * best_delta, u.squared_norm()),
                     w.squared,
                     Rat(0),
                     k,
                     n,
                     false};
    if (k >= n) {
        Int f = Int(k) - Int(n) + 2;
        rep.bound_sq = rep.width_sq / Rat(f * f);
    } else {
        rep.bound_sq = rep.width_sq / 4;
    }
    rep.holds = rep.plank_sq >= rep.bound_sq;
    return rep;
}

} // namespace hypercover
