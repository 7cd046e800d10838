#include <hypercover/errors.hpp>
#include <hypercover/graphs.hpp>
#include <hypercover/json_io.hpp>
#include <hypercover/linalg.hpp>
#include <hypercover/planks.hpp>
#include <hypercover/pointset.hpp>
#include <hypercover/sensing.hpp>
#include <hypercover/version.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace hypercover;

namespace {

struct RunReport {
    std::string command;
    json inputs = json::object();
    json outputs = json::object();
    json checks = json::array();

    void check(const std::string& name, bool pass, const std::string& details = "") {
        json c = json::object();
        c["name"] = name;
        c["pass"] = pass;
        c["details"] = details;
        checks.push_back(std::move(c));
    }

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.at("pass").get<bool>()) return false;
        return true;
    }

    int emit(std::ostream& os) const {
        json j = json::object();
        j["command"] = command;
        j["inputs"] = inputs;
        j["outputs"] = outputs;
        j["checks"] = checks;
        j["version"] = kVersion;
        os << j.dump(2) << "\n";
        return all_pass() ? 0 : 1;
    }
};

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw usage_error("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

// Files may hold either the bare artifact or a full run report that embeds
// it under "outputs"; both are accepted so command output can be chained.
const json& unwrap(const json& j, const char* key_probe) {
    if (j.is_object() && j.contains(key_probe)) return j;
    if (j.is_object() && j.contains("outputs")) {
        const json& out = j.at("outputs");
        if (out.is_object()) {
            if (out.contains(key_probe)) return out;
            for (const auto& [k, v] : out.items()) {
                (void)k;
                if (v.is_object() && v.contains(key_probe)) return v;
            }
        }
    }
    return j;
}

PointSet load_pointset(const std::string& path) {
    const json j = load_json_file(path);
    const json& spot = unwrap(j, "dim");
    if (spot.contains("dim")) return pointset_from_json(spot);
    if (spot.is_object() && spot.contains("pointset"))
        return pointset_from_json(spot.at("pointset"));
    return pointset_from_json(spot);
}

IntMatrix load_matrix(const std::string& path) {
    const json j = load_json_file(path);
    const json& spot = unwrap(j, "entries");
    if (spot.contains("entries")) return matrix_from_json(spot);
    if (spot.is_object() && spot.contains("matrix"))
        return matrix_from_json(spot.at("matrix"));
    return matrix_from_json(spot);
}

std::vector<Int> parse_int_list(const std::string& text) {
    std::vector<Int> out;
    std::string token;
    std::stringstream ss(text);
    while (std::getline(ss, token, ',')) {
        std::size_t start = token.find_first_not_of(" \t");
        std::size_t end = token.find_last_not_of(" \t");
        if (start == std::string::npos)
            throw usage_error("empty entry in integer list: \"" + text + "\"");
        token = token.substr(start, end - start + 1);
        std::size_t digits_from = (token[0] == '-' || token[0] == '+') ? 1 : 0;
        if (token.size() == digits_from)
            throw usage_error("malformed integer: \"" + token + "\"");
        for (std::size_t i = digits_from; i < token.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(token[i])))
                throw usage_error("malformed integer: \"" + token + "\"");
        out.emplace_back(token);
    }
    if (out.empty()) throw usage_error("empty integer list");
    return out;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw usage_error("cannot write file: " + path);
    out << text;
}

std::uint64_t resolve_budget(std::optional<std::uint64_t> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("HYPERCOVER_BUDGET")) {
        std::string s(env);
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw usage_error("HYPERCOVER_BUDGET must be a nonnegative integer");
        return std::stoull(s);
    }
    return kDefaultBudget;
}

json girth_to_json(const std::optional<std::size_t>& g) {
    return g ? json(*g) : json("acyclic");
}

// --- deterministic sampling for the repro sweeps ---------------------------

PointSet sample_pointset(std::mt19937& rng, std::size_t dim, std::size_t k,
                         long lo, long hi) {
    std::uniform_int_distribution<long> coord(lo, hi);
    std::set<std::vector<Int>> seen;
    while (seen.size() < k) {
        std::vector<Int> p(dim);
        for (auto& c : p) c = Int(coord(rng));
        seen.insert(p);
    }
    return PointSet(dim, std::vector<std::vector<Int>>(seen.begin(), seen.end()));
}

Direction sample_direction(std::mt19937& rng, std::size_t dim) {
    std::uniform_int_distribution<long> coord(-3, 3);
    while (true) {
        std::vector<Int> v(dim);
        bool nonzero = false;
        for (auto& c : v) {
            c = Int(coord(rng));
            if (c != 0) nonzero = true;
        }
        if (nonzero) return Direction(v);
    }
}

// --- subcommand bodies ------------------------------------------------------

int cmd_sn(std::size_t n, const std::string& out_path) {
    RunReport rep;
    rep.command = "sn";
    rep.inputs["n"] = n;
    PointSet s = build_sn(n);
    json js = pointset_to_json(s);
    rep.outputs["pointset"] = js;
    rep.check("in_unit_cube", in_cube(s, Int(1)),
              "all coordinates lie in {-1, 0, 1}");
    if (!out_path.empty()) write_file(out_path, js.dump(2) + "\n");
    return rep.emit(std::cout);
}

int cmd_cover(const std::string& input, std::optional<std::size_t> max_t) {
    RunReport rep;
    rep.command = "cover";
    rep.inputs["input"] = input;
    PointSet s = load_pointset(input);
    if (max_t) {
        rep.inputs["max_t"] = *max_t;
        auto cert = coverable_by(s, *max_t);
        rep.outputs["coverable"] = cert.has_value();
        rep.outputs["certificate"] = cert ? certificate_to_json(*cert) : json(nullptr);
        if (cert)
            rep.check("certificate_valid", certificate_valid(s, *cert),
                      "re-derived inner products and partition structure");
    } else {
        auto [t, cert] = covering_number(s);
        rep.outputs["covering_number"] = t;
        rep.outputs["certificate"] = certificate_to_json(cert);
        rep.check("certificate_valid", certificate_valid(s, cert),
                  "re-derived inner products and partition structure");
        std::size_t cap = std::max<std::size_t>(
            1, s.size() > s.dimension() ? s.size() - s.dimension() + 1 : 1);
        rep.check("within_general_bound", t <= cap,
                  "covering number <= max{1, k-n+1}");
    }
    return rep.emit(std::cout);
}

int cmd_graph(std::size_t m, std::size_t l, std::optional<std::size_t> ell,
              bool complete, const std::string& out_path) {
    RunReport rep;
    rep.command = "graph";
    rep.inputs["m"] = m;
    rep.inputs["l"] = l;
    rep.inputs["complete"] = complete;
    BipartiteGraph g = [&] {
        if (complete) return complete_bipartite(m, l);
        if (!ell) throw usage_error("--ell is required unless --complete is given");
        return greedy_girth_graph(m, l, *ell);
    }();
    if (ell) rep.inputs["ell"] = *ell;
    json jg = graph_to_json(g);
    auto gv = girth(g);
    rep.outputs["graph"] = jg;
    rep.outputs["edges"] = g.edges().size();
    rep.outputs["girth"] = girth_to_json(gv);
    if (!complete && ell) {
        bool ok = !gv.has_value() || *gv > *ell;
        rep.check("girth_exceeds_ell", ok, "no cycle of length <= ell survives");
    }
    if (!out_path.empty()) write_file(out_path, jg.dump(2) + "\n");
    return rep.emit(std::cout);
}

int cmd_build(std::size_t n, std::size_t ell, const std::string& out_path,
              const std::string& format, std::uint64_t budget) {
    RunReport rep;
    rep.command = "build";
    rep.inputs["n"] = n;
    rep.inputs["ell"] = ell;
    rep.inputs["budget"] = budget;
    auto [a, sr] = build_corollary_matrix(n, ell, budget);
    if (format == "csv") {
        std::string csv = matrix_to_csv(a);
        if (!out_path.empty()) write_file(out_path, csv);
        std::cout << csv;
        return sr.verified ? 0 : 1;
    }
    rep.outputs["matrix"] = matrix_to_json(a);
    rep.outputs["report"] = sensing_report_to_json(sr);
    rep.check("sensing_verified", sr.verified,
              "every ell-subset of columns is independent");
    rep.check("sup_norm_at_most_2", sr.sup_norm <= 2,
              "entries stay within the doubled unit cube");
    if (sr.bound)
        rep.check("d_reaches_edge_bound",
                  static_cast<double>(sr.d) >= *sr.bound,
                  "column count d >= (k/2)^(1+2/(3*ell-2))");
    if (!out_path.empty()) write_file(out_path, matrix_to_json(a).dump(2) + "\n");
    return rep.emit(std::cout);
}

int cmd_verify(const std::string& matrix_path, std::size_t ell,
               std::uint64_t budget) {
    RunReport rep;
    rep.command = "verify";
    rep.inputs["matrix"] = matrix_path;
    rep.inputs["ell"] = ell;
    rep.inputs["budget"] = budget;
    IntMatrix a = load_matrix(matrix_path);
    SensingReport sr = verify_sensing(a, ell, budget);
    rep.outputs["report"] = sensing_report_to_json(sr);
    rep.check("sensing_verified", sr.verified,
              sr.verified ? "every ell-subset of columns is independent"
                          : "dependent witness column set reported");
    return rep.emit(std::cout);
}

int cmd_recover(const std::string& matrix_path, const std::string& y_text,
                std::size_t s, const std::string& bound_text,
                std::uint64_t budget) {
    RunReport rep;
    rep.command = "recover";
    rep.inputs["matrix"] = matrix_path;
    rep.inputs["y"] = y_text;
    rep.inputs["s"] = s;
    rep.inputs["bound"] = bound_text;
    rep.inputs["budget"] = budget;
    IntMatrix a = load_matrix(matrix_path);
    std::vector<Int> y = parse_int_list(y_text);
    std::vector<Int> b_list = parse_int_list(bound_text);
    if (b_list.size() != 1) throw usage_error("--bound takes a single integer");
    const Int& bound = b_list[0];
    try {
        auto x = recover(a, y, s, bound, budget);
        if (x) {
            json coords = json::array();
            for (const auto& v : *x) coords.push_back(int_to_json(v));
            rep.outputs["solution"] = coords;
            std::vector<Int> check_y(a.rows(), 0);
            for (std::size_t i = 0; i < a.rows(); ++i)
                for (std::size_t j = 0; j < a.cols(); ++j)
                    check_y[i] += a.at(i, j) * (*x)[j];
            rep.check("residual_exact", check_y == y, "A*x equals y entry-for-entry");
            rep.check("recovered", true, "unique sparse bounded solution found");
        } else {
            rep.outputs["solution"] = nullptr;
            rep.check("recovered", false,
                      "no s-sparse solution with entries within the bound");
        }
    } catch (const ambiguity_error& e) {
        rep.outputs["solution"] = nullptr;
        rep.check("unique", false, e.what());
    }
    return rep.emit(std::cout);
}

int cmd_project(const std::string& input, const std::string& dir_text) {
    RunReport rep;
    rep.command = "project";
    rep.inputs["input"] = input;
    rep.inputs["dir"] = dir_text;
    PointSet s = load_pointset(input);
    Direction v(parse_int_list(dir_text));
    ProjectionProfile p = project(s, v);
    rep.outputs["profile"] = profile_to_json(p);
    auto gap = max_gap(p);
    rep.outputs["max_gap_sq"] = gap ? rat_to_json(*gap) : json("infinite");
    return rep.emit(std::cout);
}

int cmd_width(const std::string& input, bool sample) {
    RunReport rep;
    rep.command = "width";
    rep.inputs["input"] = input;
    rep.inputs["sample"] = sample;
    PointSet s = load_pointset(input);
    WidthResult w = sample ? width_upper_bound(s) : width_exact(s);
    rep.outputs["squared_width"] = rat_to_json(w.squared);
    rep.outputs["direction"] = direction_to_json(w.direction);
    rep.outputs["certified"] = !sample;
    return rep.emit(std::cout);
}

int cmd_plank(const std::string& body_path, const std::string& points_path) {
    RunReport rep;
    rep.command = "plank";
    rep.inputs["body"] = body_path;
    rep.inputs["points"] = points_path;
    PointSet body = load_pointset(body_path);
    PointSet x = load_pointset(points_path);
    PlankWitness w = plank_witness(body, x);
    rep.outputs["witness"] = plank_witness_to_json(w);
    rep.check("plank_at_least_bound", w.holds,
              "witness squared width >= guaranteed lower bound");
    return rep.emit(std::cout);
}

// --- named reproductions ----------------------------------------------------

void repro_sn_covering(RunReport& rep) {
    for (std::size_t n = 1; n <= 8; ++n) {
        auto [t, cert] = covering_number(build_sn(n));
        bool ok = (t == 3) && certificate_valid(build_sn(n), cert);
        rep.check("covering_number_sn_" + std::to_string(n), ok,
                  "expected 3, got " + std::to_string(t));
    }
    rep.outputs["covering_number"] = 3;
}

void repro_example_63(RunReport& rep, std::uint64_t budget) {
    auto [a, sr] = build_corollary_matrix(3, 2, budget);
    IntMatrix want = IntMatrix::from_rows({
        {1, -1, 1, -1, 1, -1},
        {-1, -1, -1, -1, -2, -2},
        {-1, -1, -2, -2, 0, 0},
    });
    rep.outputs["matrix"] = matrix_to_json(a);
    rep.check("matrix_entries", a == want, "3x6 difference matrix reproduced");
    SensingReport s3 = verify_sensing(a, 3, budget);
    rep.outputs["report"] = sensing_report_to_json(s3);
    rep.check("three_sparse_sensing", s3.verified,
              "all 20 three-column subsets independent");
    rep.check("sup_norm", a.sup_norm() == 2, "maximum entry magnitude is 2");
    (void)sr;
}

void repro_counterexample_2x4(RunReport& rep, std::uint64_t budget) {
    IntMatrix a = IntMatrix::from_rows({{2, 1, 3, 2}, {1, 2, 1, 2}});
    SensingReport sr = verify_sensing(a, 2, budget);
    rep.outputs["report"] = sensing_report_to_json(sr);
    rep.check("two_sparse_sensing", sr.verified, "all six 2x2 minors nonzero");

    PointSet s(2, {{0, 0}, {2, 1}, {1, 2}, {3, 1}, {2, 2}});
    auto [t, cert] = covering_number(s);
    rep.outputs["covering_number"] = t;
    rep.outputs["certificate"] = certificate_to_json(cert);
    rep.check("covering_number_is_3", t == 3,
              "three parallel lines suffice despite good sensing");
    bool normal_ok = cert.normal.coords() == std::vector<Int>{1, 1};
    bool values_ok = cert.classes.size() == 3 && cert.classes[0].value == 0 &&
                     cert.classes[1].value == 3 && cert.classes[2].value == 4;
    rep.check("witness_normal_and_values", normal_ok && values_ok,
              "normal (1,1) with projection values {0,3,4}");
}

void repro_corollary_bound(RunReport& rep, std::uint64_t budget) {
    json table = json::array();
    double prev_ratio = 0.0;
    bool increasing = true;
    for (std::size_t n : {6u, 10u, 14u}) {
        auto [a, sr] = build_corollary_matrix(n, 3, budget);
        (void)a;
        json row = json::object();
        row["n"] = n;
        row["d"] = sr.d;
        row["bound"] = *sr.bound;
        row["ratio_d_over_n"] = static_cast<double>(sr.d) / static_cast<double>(n);
        table.push_back(row);
        rep.check("verified_n" + std::to_string(n), sr.verified,
                  "pipeline matrix senses 3-sparse signals");
        double d_val = static_cast<double>(sr.d);
        rep.check("bound_n" + std::to_string(n),
                  d_val >= *sr.bound * (1.0 - 1e-9),
                  "d >= ((n+2)/2)^(9/7) within 1e-9 relative tolerance");
        double ratio = d_val / static_cast<double>(n);
        increasing = increasing && (ratio > prev_ratio);
        prev_ratio = ratio;
    }
    rep.outputs["table"] = table;
    rep.check("ratio_strictly_increasing", increasing,
              "d/n grows across n = 6, 10, 14");
}

void repro_gap_bound(RunReport& rep) {
    std::mt19937 rng(140514);
    std::size_t sets = 0, trials = 0, failures = 0;
    for (int it = 0; it < 110; ++it) {
        std::size_t dim = 2 + rng() % 2;
        std::size_t k = 2 + rng() % 7;
        PointSet s = sample_pointset(rng, dim, k, -5, 5);
        ++sets;
        for (int jt = 0; jt < 50; ++jt) {
            GapBoundReport g = check_gap_bound(s, sample_direction(rng, dim));
            ++trials;
            if (!g.pass) ++failures;
        }
    }
    rep.outputs["sets"] = sets;
    rep.outputs["trials"] = trials;
    rep.outputs["failures"] = failures;
    rep.check("gap_bound_universal", failures == 0,
              "max_gap * (m-1)^2 >= squared width in every trial");
}

void repro_grid_bounds(RunReport& rep) {
    GridBoundReport base = grid_bound_check(build_sn(3), Int(1));
    rep.outputs["sn3"] = grid_report_to_json(base);
    rep.check("sn3_pass", base.pass,
              "covering 3 == 2T+1 and k = 5 == 2T+n at T = 1");
    rep.check("sn3_sharp", base.lower_applicable && base.upper_applicable,
              "both implications trigger with equality");

    GridBoundReport single = grid_bound_check(PointSet(2, {{1, 1}}), Int(1));
    rep.check("single_point_vacuous",
              single.pass && !single.lower_applicable && !single.upper_applicable,
              "no hypothesis triggers for one point");

    std::mt19937 rng(271828);
    std::size_t failures = 0, trials = 0;
    for (int it = 0; it < 60; ++it) {
        PointSet s = sample_pointset(rng, 2, 4, -2, 2);
        if (!grid_bound_check(s, Int(2)).pass) ++failures;
        ++trials;
    }
    rep.outputs["random_trials"] = trials;
    rep.check("random_cube_sets_pass", failures == 0,
              "both implications hold on sampled subsets of the T = 2 cube");
}

int cmd_repro(const std::string& name, std::uint64_t budget) {
    RunReport rep;
    rep.command = "repro";
    rep.inputs["name"] = name;
    rep.inputs["budget"] = budget;
    if (name == "sn-covering") {
        repro_sn_covering(rep);
    } else if (name == "example-63") {
        repro_example_63(rep, budget);
    } else if (name == "counterexample-2x4") {
        repro_counterexample_2x4(rep, budget);
    } else if (name == "corollary-bound") {
        repro_corollary_bound(rep, budget);
    } else if (name == "gap-bound") {
        repro_gap_bound(rep);
    } else if (name == "grid-bounds") {
        repro_grid_bounds(rep);
    } else {
        throw usage_error(
            "unknown reproduction \"" + name +
            "\"; valid names: sn-covering, example-63, counterexample-2x4, "
            "corollary-bound, gap-bound, grid-bounds");
    }
    return rep.emit(std::cout);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypercover: exact parallel-hyperplane covering numbers, "
                 "difference-set sensing matrices, sparse recovery, and "
                 "projection-gap bounds over the integers"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    std::optional<std::uint64_t> budget_flag;
    app.add_option("--budget", budget_flag,
                   "enumeration budget for subset/support searches "
                   "(default 10000000; env HYPERCOVER_BUDGET)")
        ->envname("HYPERCOVER_BUDGET");
    std::size_t threads = 1;
    app.add_option("--threads", threads,
                   "worker cap; accepted for compatibility, execution is "
                   "single-threaded and deterministic");

    auto* sn = app.add_subcommand("sn", "emit the extremal point family S_n");
    std::size_t sn_n = 0;
    std::string sn_out;
    sn->add_option("--n", sn_n, "dimension")->required();
    sn->add_option("--out", sn_out, "write the point set JSON to this file");

    auto* cover = app.add_subcommand(
        "cover", "covering number and certificate of a point set");
    std::string cover_input;
    std::optional<std::size_t> cover_max_t;
    cover->add_option("--input", cover_input, "point set JSON file")->required();
    cover->add_option("--max-t", cover_max_t,
                      "only test coverability by at most this many hyperplanes");

    auto* graph = app.add_subcommand(
        "graph", "bipartite pattern graphs: greedy high-girth or complete");
    std::size_t graph_m = 0, graph_l = 0;
    std::optional<std::size_t> graph_ell;
    bool graph_complete = false;
    std::string graph_out;
    graph->add_option("--m", graph_m, "left side size")->required();
    graph->add_option("--l", graph_l, "right side size")->required();
    graph->add_option("--ell", graph_ell, "forbid cycles of length <= ell");
    graph->add_flag("--complete", graph_complete, "emit the complete graph instead");
    graph->add_option("--out", graph_out, "write the graph JSON to this file");

    auto* build = app.add_subcommand(
        "build", "difference-set sensing matrix from S_n with a pattern graph");
    std::size_t build_n = 0, build_ell = 0;
    std::string build_out, build_format = "json";
    build->add_option("--n", build_n, "dimension (k = n + 2 points)")->required();
    build->add_option("--ell", build_ell, "sparsity level to verify")->required();
    build->add_option("--out", build_out, "write the matrix to this file");
    build->add_option("--format", build_format, "json (default) or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* verify = app.add_subcommand(
        "verify", "check that every ell-subset of matrix columns is independent");
    std::string verify_matrix;
    std::size_t verify_ell = 0;
    verify->add_option("--matrix", verify_matrix, "matrix JSON file")->required();
    verify->add_option("--ell", verify_ell, "sparsity level")->required();

    auto* rec = app.add_subcommand(
        "recover", "exact sparse integer recovery from exact measurements");
    std::string rec_matrix, rec_y, rec_bound;
    std::size_t rec_s = 0;
    rec->add_option("--matrix", rec_matrix, "matrix JSON file")->required();
    rec->add_option("--y", rec_y, "measurement vector, comma-separated")->required();
    rec->add_option("--s", rec_s, "maximum support size")->required();
    rec->add_option("--bound", rec_bound, "entry magnitude bound B")->required();

    auto* proj = app.add_subcommand(
        "project", "exact projection profile of a point set along a direction");
    std::string proj_input, proj_dir;
    proj->add_option("--input", proj_input, "point set JSON file")->required();
    proj->add_option("--dir", proj_dir, "direction, comma-separated")->required();

    auto* width = app.add_subcommand(
        "width", "exact squared width of the convex hull (dimension <= 3)");
    std::string width_input;
    bool width_sample = false;
    width->add_option("--input", width_input, "point set JSON file")->required();
    width->add_flag("--sample", width_sample,
                    "sampled upper bound instead of the exact value "
                    "(any dimension, not certified)");

    auto* plank = app.add_subcommand(
        "plank", "widest point-free plank witness inside a convex body");
    std::string plank_body, plank_points;
    plank->add_option("--body", plank_body, "body vertex JSON file")->required();
    plank->add_option("--points", plank_points, "marked point JSON file")->required();

    auto* repro = app.add_subcommand("repro", "named end-to-end reproductions");
    std::string repro_name;
    repro->add_option("name", repro_name,
                      "sn-covering | example-63 | counterexample-2x4 | "
                      "corollary-bound | gap-bound | grid-bounds")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << "run with --help for usage\n";
        return 2;
    }

    (void)threads;

    try {
        std::uint64_t budget = resolve_budget(budget_flag);
        if (sn->parsed()) return cmd_sn(sn_n, sn_out);
        if (cover->parsed()) return cmd_cover(cover_input, cover_max_t);
        if (graph->parsed())
            return cmd_graph(graph_m, graph_l, graph_ell, graph_complete, graph_out);
        if (build->parsed())
            return cmd_build(build_n, build_ell, build_out, build_format, budget);
        if (verify->parsed()) return cmd_verify(verify_matrix, verify_ell, budget);
        if (rec->parsed())
            return cmd_recover(rec_matrix, rec_y, rec_s, rec_bound, budget);
        if (proj->parsed()) return cmd_project(proj_input, proj_dir);
        if (width->parsed()) return cmd_width(width_input, width_sample);
        if (plank->parsed()) return cmd_plank(plank_body, plank_points);
        if (repro->parsed()) return cmd_repro(repro_name, budget);
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
