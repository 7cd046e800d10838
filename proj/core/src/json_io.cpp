#include "hypercover/json_io.hpp"

#include <cctype>
#include <cstdint>

namespace hypercover {

namespace {

const Int& json_number_limit() {
    static const Int lim = Int(1) << 53;
    return lim;
}

json int_vector_to_json(const std::vector<Int>& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(int_to_json(x));
    return a;
}

std::vector<Int> int_vector_from_json(const json& j) {
    if (!j.is_array())
        throw usage_error("json: expected an array of integers");
    std::vector<Int> v;
    v.reserve(j.size());
    for (const auto& x : j) v.push_back(int_from_json(x));
    return v;
}

json index_vector_to_json(const std::vector<std::size_t>& v) {
    json a = json::array();
    for (std::size_t x : v) a.push_back(x);
    return a;
}

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw usage_error(std::string("json: missing field \"") + key + "\"");
    return j.at(key);
}

std::size_t size_from_json(const json& j, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        throw usage_error(std::string("json: ") + what + " must be a nonnegative integer");
    return j.get<std::size_t>();
}

} // namespace

json int_to_json(const Int& v) {
    if (abs(v) < json_number_limit())
        return json(v.convert_to<std::int64_t>());
    return json(v.str());
}

Int int_from_json(const json& j) {
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (s.size() == start)
            throw usage_error("json: malformed integer string");
        for (std::size_t i = start; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw usage_error("json: malformed integer string");
        return Int(s);
    }
    throw usage_error("json: expected an integer (number or decimal string)");
}

json rat_to_json(const Rat& r) {
    json j = json::object();
    j["num"] = int_to_json(numerator(r));
    j["den"] = int_to_json(denominator(r));
    return j;
}

json matrix_to_json(const IntMatrix& m) {
    json j = json::object();
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    json entries = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(int_to_json(m.at(r, c)));
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

IntMatrix matrix_from_json(const json& j) {
    std::size_t rows = size_from_json(require(j, "rows"), "rows");
    std::size_t cols = size_from_json(require(j, "cols"), "cols");
    const json& entries = require(j, "entries");
    if (!entries.is_array() || entries.size() != rows)
        throw usage_error("json: entries must hold one array per row");
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        std::vector<Int> row = int_vector_from_json(entries.at(r));
        if (row.size() != cols)
            throw usage_error("json: row length must match cols");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = std::move(row[c]);
    }
    return m;
}

std::string matrix_to_csv(const IntMatrix& m) {
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out += ',';
            out += m.at(r, c).str();
        }
        out += '\n';
    }
    return out;
}

json pointset_to_json(const PointSet& s) {
    json j = json::object();
    j["dim"] = s.dimension();
    json pts = json::array();
    for (const auto& p : s.points()) pts.push_back(int_vector_to_json(p));
    j["points"] = std::move(pts);
    return j;
}

PointSet pointset_from_json(const json& j) {
    std::size_t dim = size_from_json(require(j, "dim"), "dim");
    const json& pts = require(j, "points");
    if (!pts.is_array())
        throw usage_error("json: points must be an array");
    std::vector<std::vector<Int>> points;
    points.reserve(pts.size());
    for (const auto& p : pts) points.push_back(int_vector_from_json(p));
    return PointSet(dim, std::move(points));
}

json graph_to_json(const BipartiteGraph& g) {
    json j = json::object();
    j["left"] = g.left_size();
    j["right"] = g.right_size();
    json edges = json::array();
    for (const auto& [a, b] : g.edges())
        edges.push_back(json::array({a + 1, b + 1}));
    j["edges"] = std::move(edges);
    return j;
}

BipartiteGraph graph_from_json(const json& j) {
    std::size_t left = size_from_json(require(j, "left"), "left");
    std::size_t right = size_from_json(require(j, "right"), "right");
    const json& edges = require(j, "edges");
    if (!edges.is_array())
        throw usage_error("json: edges must be an array");
    std::vector<BipartiteGraph::Edge> es;
    es.reserve(edges.size());
    for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 2)
            throw usage_error("json: each edge must be a pair");
        std::size_t a = size_from_json(e.at(0), "edge endpoint");
        std::size_t b = size_from_json(e.at(1), "edge endpoint");
        if (a < 1 || b < 1)
            throw usage_error("json: edge endpoints are 1-based");
        es.emplace_back(a - 1, b - 1);
    }
    return BipartiteGraph(left, right, std::move(es));
}

json certificate_to_json(const CoveringCertificate& c) {
    json j = json::object();
    j["normal"] = int_vector_to_json(c.normal.coords());
    j["t"] = c.t();
    json classes = json::array();
    for (const auto& cls : c.classes) {
        json e = json::object();
        e["value"] = int_to_json(cls.value);
        e["members"] = index_vector_to_json(cls.members);
        classes.push_back(std::move(e));
    }
    j["classes"] = std::move(classes);
    return j;
}

json direction_to_json(const Direction& d) {
    json j = json::object();
    j["coords"] = int_vector_to_json(d.coords());
    j["squared_norm"] = int_to_json(d.squared_norm());
    return j;
}

json profile_to_json(const ProjectionProfile& p) {
    json j = json::object();
    j["direction"] = direction_to_json(p.direction);
    j["m"] = p.m();
    j["values"] = int_vector_to_json(p.values);
    json members = json::array();
    for (const auto& mem : p.members) members.push_back(index_vector_to_json(mem));
    j["members"] = std::move(members);
    return j;
}

json sensing_report_to_json(const SensingReport& r) {
    json j = json::object();
    j["n"] = r.n;
    j["d"] = r.d;
    j["ell"] = r.ell;
    j["verified"] = r.verified;
    j["witness"] = r.witness ? index_vector_to_json(*r.witness) : json(nullptr);
    j["sup_norm"] = int_to_json(r.sup_norm);
    j["bound"] = r.bound ? json(*r.bound) : json(nullptr);
    return j;
}

json grid_report_to_json(const GridBoundReport& r) {
    json j = json::object();
    j["k"] = r.k;
    j["n"] = r.n;
    j["T"] = int_to_json(r.T);
    j["covering"] = r.covering;
    j["lower_applicable"] = r.lower_applicable;
    j["lower_holds"] = r.lower_holds;
    j["upper_applicable"] = r.upper_applicable;
    j["upper_holds"] = r.upper_holds;
    j["pass"] = r.pass;
    return j;
}

json gap_report_to_json(const GapBoundReport& r) {
    json j = json::object();
    j["m"] = r.m;
    j["vacuous"] = r.vacuous;
    j["gap_sq"] = r.vacuous ? json("infinite") : rat_to_json(r.gap_sq);
    j["width_sq"] = rat_to_json(r.width_sq);
    j["lhs"] = r.vacuous ? json("infinite") : rat_to_json(r.lhs);
    j["pass"] = r.pass;
    return j;
}

json plank_witness_to_json(const PlankWitness& w) {
    json j = json::object();
    j["direction"] = direction_to_json(w.direction);
    j["lo"] = int_to_json(w.lo);
    j["hi"] = int_to_json(w.hi);
    j["plank_sq"] = rat_to_json(w.plank_sq);
    j["width_sq"] = rat_to_json(w.width_sq);
    j["bound_sq"] = rat_to_json(w.bound_sq);
    j["k"] = w.k;
    j["n"] = w.n;
    j["holds"] = w.holds;
    return j;
}

json forward_report_to_json(const ForwardImplicationReport& r) {
    json j = json::object();
    j["k"] = r.k;
    j["n"] = r.n;
    j["ell"] = r.ell;
    j["d"] = r.d;
    j["covering"] = r.covering;
    j["covering_hypothesis"] = r.covering_hypothesis;
    j["girth"] = r.girth_value ? json(*r.girth_value) : json("acyclic");
    j["girth_hypothesis"] = r.girth_hypothesis;
    j["verified"] = r.verified;
    j["implication_holds"] = r.implication_holds;
    return j;
}

json converse_report_to_json(const ConverseImplicationReport& r) {
    json j = json::object();
    j["k"] = r.k;
    j["n"] = r.n;
    j["partitions_checked"] = r.partitions_checked;
    j["partitions_verified"] = r.partitions_verified;
    j["hypothesis_all_verified"] = r.hypothesis_all_verified;
    j["covering"] = r.covering;
    j["conclusion_holds"] = r.conclusion_holds;
    j["implication_holds"] = r.implication_holds;
    return j;
}

} // namespace hypercover
