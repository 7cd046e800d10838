#pragma once

#include "hypercover/graphs.hpp"
#include "hypercover/planks.hpp"
#include "hypercover/pointset.hpp"
#include "hypercover/sensing.hpp"

#include <json.hpp>

#include <string>

namespace hypercover {

using json = nlohmann::ordered_json;

// Integers are emitted as JSON numbers while |value| < 2^53 and as decimal
// strings beyond that, so no reader ever rounds them. Both forms parse back.
json int_to_json(const Int& v);
Int int_from_json(const json& j);

// Exact rational as {"num": a, "den": b}, lowest terms, positive denominator.
json rat_to_json(const Rat& r);

// {"rows": R, "cols": C, "entries": [[row]...]}
json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

// One matrix row per line, entries comma-separated.
std::string matrix_to_csv(const IntMatrix& m);

// {"dim": n, "points": [[...], ...]}
json pointset_to_json(const PointSet& s);
PointSet pointset_from_json(const json& j);

// {"left": m, "right": l, "edges": [[i, j], ...]} with 1-based indices.
json graph_to_json(const BipartiteGraph& g);
BipartiteGraph graph_from_json(const json& j);

// Point indices in certificates and profiles are 0-based positions in the
// "points" array.
json certificate_to_json(const CoveringCertificate& c);
json direction_to_json(const Direction& d);
json profile_to_json(const ProjectionProfile& p);
json sensing_report_to_json(const SensingReport& r);
json grid_report_to_json(const GridBoundReport& r);
json gap_report_to_json(const GapBoundReport& r);
json plank_witness_to_json(const PlankWitness& w);
json forward_report_to_json(const ForwardImplicationReport& r);
json converse_report_to_json(const ConverseImplicationReport& r);

} // namespace hypercover
