#pragma once

// ascii, dot and json renderings of crossed diagrams and of the reports built
// on them. All output is deterministic: sets are sorted and json objects keep
// a fixed field order.

#include <string>

#include <json.hpp>

#include "crflag/fibration.hpp"
#include "crflag/oracles.hpp"

namespace crflag {

enum class Format { Ascii, Dot, Json };

/// Three lines: node glyphs (o white, * black) with bonds, labels, crosses.
/// Bonds between non-consecutive nodes are listed as [i-j], arrows as (i~j).
/// An empty diagram renders as "(trivial)".
std::string render_ascii(const CrossedDiagram& cd);
std::string render_dot(const CrossedDiagram& cd);
/// {"type","rank","black","arrows","cross"} with 1-based indices.
std::string render_json(const CrossedDiagram& cd);
std::string render(const CrossedDiagram& cd, Format f);

nlohmann::ordered_json diagram_json(const CrossedDiagram& cd);
nlohmann::ordered_json labels_json(const SatakeDiagram& d, NodeSet nodes);
nlohmann::ordered_json analysis_json(const OrbitAnalysis& a);
/// `nodes` carries the display labels of the parent for each fiber node.
nlohmann::ordered_json subdiagram_json(const SubDiagram& sub);
nlohmann::ordered_json fibration_json(const CrossedDiagram& cd, const FibrationReport& f);
nlohmann::ordered_json sweep_json(const SweepReport& r);

/// "{1,2}" in the diagram's display labels.
std::string label_set(const SatakeDiagram& d, NodeSet nodes);

}  // namespace crflag
