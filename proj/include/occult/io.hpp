#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "occult/asterism.hpp"
#include "occult/detectors.hpp"
#include "occult/extraction.hpp"
#include "occult/graph.hpp"
#include "occult/treewidth.hpp"

namespace occult {

using nlohmann::json;

// Graph JSON: {"n": <int>, "edges": [[u,v],...]} with vertices 0..n-1 and
// edges normalized (u < v) and sorted, so serialization is byte-deterministic.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

/// DOT export, vertices and edges in ascending order.
std::string graph_to_dot(const Graph& g);

// Witness formats.
json asterism_to_json(const OrderedAsterism& a);           // {"S": [...], "L": [...]}
OrderedAsterism asterism_from_json(const json& j);

json polypath_to_json(const Polypath& p);
Polypath polypath_from_json(const json& j);

json constellation_to_json(const Constellation& c);
Constellation constellation_from_json(const json& j);

json gemini_to_json(const Gemini& g);
Gemini gemini_from_json(const json& j);

json patch_to_json(const Patch& p);
Patch patch_from_json(const json& j);

json match_to_json(const Match& m);
Match match_from_json(const json& j);

json cycles_to_json(const std::vector<CycleWitness>& cycles);
std::vector<CycleWitness> cycles_from_json(const json& j);

json strong_block_witness_to_json(const StrongBlockWitness& w);
StrongBlockWitness strong_block_witness_from_json(const json& j);

json intervals_to_json(const IntervalFamily& f);
IntervalFamily intervals_from_json(const json& j);

json perforation_verdict_to_json(const PerforationVerdict& v);

json extraction_outcome_to_json(const ExtractionOutcome& o);

json decomposition_to_json(const TreeDecomposition& td);
TreeDecomposition decomposition_from_json(const json& j);

/// PACE-style text: header "s td <bags> <max bag size> <n>", one line
/// "b <index> <vertices...>" per bag (1-based indices), then one line
/// "<i> <j>" per tree edge.
std::string decomposition_to_pace(const TreeDecomposition& td, const Graph& g);
TreeDecomposition decomposition_from_pace(const std::string& text);

/// Canonical serialization used by every file the tools write: 2-space
/// indent, sorted keys, trailing newline.
std::string dump_json(const json& j);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace occult
