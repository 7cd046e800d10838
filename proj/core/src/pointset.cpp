#include "hypercover/pointset.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hypercover {

PointSet::PointSet(std::size_t dim, std::vector<std::vector<Int>> points)
    : dim_(dim), points_(std::move(points)) {
    if (dim_ < 1)
        throw usage_error("PointSet: dimension must be >= 1");
    for (const auto& p : points_)
        if (p.size() != dim_)
            throw usage_error("PointSet: point dimension mismatch");
    std::set<std::vector<Int>> seen;
    for (const auto& p : points_)
        if (!seen.insert(p).second)
            throw usage_error("PointSet: duplicate point");
}

PointSet build_sn(std::size_t n) {
    if (n < 1)
        throw usage_error("build_sn: n must be >= 1");
    std::vector<std::vector<Int>> pts;
    pts.reserve(n + 2);
    pts.emplace_back(n, Int(0));
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<Int> x(n, Int(0));
        x[n - i] = -1;
        for (std::size_t j = n - i + 1; j < n; ++j) x[j] = 1;
        pts.push_back(std::move(x));
    }
    pts.emplace_back(n, Int(1));
    return PointSet(n, std::move(pts));
}

bool certificate_valid(const PointSet& s, const CoveringCertificate& cert) {
    if (cert.normal.dimension() != s.dimension()) return false;
    std::vector<Int> v = cert.normal.coords();
    if (!canonicalize_primitive(v) || v != cert.normal.coords()) return false;
    if (cert.classes.empty()) return false;
    std::vector<bool> used(s.size(), false);
    for (std::size_t c = 0; c < cert.classes.size(); ++c) {
        const auto& cls = cert.classes[c];
        if (c > 0 && !(cert.classes[c - 1].value < cls.value)) return false;
        if (cls.members.empty()) return false;
        for (std::size_t i = 0; i < cls.members.size(); ++i) {
            std::size_t idx = cls.members[i];
            if (i > 0 && !(cls.members[i - 1] < idx)) return false;
            if (idx >= s.size() || used[idx]) return false;
            used[idx] = true;
            if (dot(cert.normal.coords(), s.point(idx)) != cls.value) return false;
        }
    }
    return std::all_of(used.begin(), used.end(), [](bool b) { return b; });
}

namespace {

// Next restricted-growth string with labels < max_blocks, lexicographic.
bool next_rgs(std::vector<std::size_t>& a, std::size_t max_blocks) {
    const std::size_t k = a.size();
    for (std::size_t i = k; i-- > 1;) {
        std::size_t prefix_max = 0;
        for (std::size_t j = 0; j < i; ++j) prefix_max = std::max(prefix_max, a[j]);
        std::size_t cap = std::min(prefix_max + 1, max_blocks - 1);
        if (a[i] < cap) {
            ++a[i];
            for (std::size_t j = i + 1; j < k; ++j) a[j] = 0;
            return true;
        }
    }
    return false;
}

CoveringCertificate make_certificate(const PointSet& s, const KernelVector& normal) {
    std::map<Int, std::vector<std::size_t>> fibers;
    for (std::size_t i = 0; i < s.size(); ++i)
        fibers[dot(normal.coords(), s.point(i))].push_back(i);
    CoveringCertificate cert{normal, {}};
    for (auto& [value, members] : fibers)
        cert.classes.push_back({value, std::move(members)});
    return cert;
}

} // namespace

std::optional<CoveringCertificate> coverable_by(const PointSet& s, std::size_t t) {
    if (t < 1)
        throw usage_error("coverable_by: t must be >= 1");
    const std::size_t k = s.size();
    if (k == 0)
        throw usage_error("coverable_by: empty point set");
    if (t == 2 && k > 22)
        throw capacity_error("coverable_by: more than 22 points at t = 2");
    if (t >= 3 && k > 16)
        throw capacity_error("coverable_by: more than 16 points at t >= 3");
    const std::size_t n = s.dimension();
    const std::size_t max_blocks = std::min(t, k);

    std::vector<std::size_t> rgs(k, 0);
    while (true) {
        std::vector<std::size_t> rep(max_blocks, k); // first index per block
        std::vector<std::vector<Int>> rows;
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t b = rgs[i];
            if (rep[b] == k) {
                rep[b] = i;
                continue;
            }
            std::vector<Int> diff(n);
            for (std::size_t j = 0; j < n; ++j)
                diff[j] = s.point(i)[j] - s.point(rep[b])[j];
            rows.push_back(std::move(diff));
        }
        IntMatrix m = rows.empty() ? IntMatrix(0, n) : IntMatrix::from_rows(rows);
        if (auto ker = kernel_vector(m))
            return make_certificate(s, *ker);
        if (!next_rgs(rgs, max_blocks)) break;
    }
    return std::nullopt;
}

std::pair<std::size_t, CoveringCertificate> covering_number(const PointSet& s) {
    for (std::size_t t = 1; t <= s.size(); ++t) {
        if (auto cert = coverable_by(s, t))
            return {cert->t(), std::move(*cert)};
    }
    throw std::logic_error("covering_number: search exhausted"); // unreachable
}

bool in_cube(const PointSet& s, const Int& T) {
    if (T < 1)
        throw usage_error("in_cube: T must be >= 1");
    for (const auto& p : s.points())
        for (const Int& x : p)
            if (abs(x) > T) return false;
    return true;
}

GridBoundReport grid_bound_check(const PointSet& s, const Int& T) {
    if (!in_cube(s, T))
        throw usage_error("grid_bound_check: set does not lie in the cube");
    GridBoundReport rep;
    rep.k = s.size();
    rep.n = s.dimension();
    rep.T = T;
    rep.covering = covering_number(s).first;

    const Int k(rep.k), n(rep.n), cover(rep.covering);
    rep.lower_applicable = (cover == k - n + 1);
    if (rep.lower_applicable) rep.lower_holds = (k <= 2 * T + n);
    rep.upper_applicable = (cover == 2 * T + 1);
    if (rep.upper_applicable) rep.upper_holds = (k >= 2 * T + n);
    rep.pass = rep.lower_holds && rep.upper_holds;
    return rep;
}

} // namespace hypercover
