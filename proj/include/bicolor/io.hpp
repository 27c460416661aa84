#pragma once

// JSON forms of systems, states, patterns and reports.

#include <json.hpp>
#include <string>

#include "bicolor/classify.hpp"
#include "bicolor/gt.hpp"
#include "bicolor/merge.hpp"
#include "bicolor/recurrence.hpp"
#include "bicolor/solvability.hpp"
#include "bicolor/sweeps.hpp"

namespace bicolor {

using Json = nlohmann::json;

/// {"r", "N", "lambda", "w1".."w4"}; permutations in one-line "[2,3,1]" or
/// cycle "(123)" form. Missing or malformed fields raise ParseError naming the field.
SystemSpec system_from_json(const Json& j);
/// Permutations are written in cycle form.
Json to_json(const SystemSpec& spec);

Json to_json(const EdgeContent& v);
EdgeContent content_from_json(const Json& j, int s, int r);

/// {"vcontent": [[content, ...], ...], "hspin": [["c1", ...], ...]}
Json to_json(const State& st);
State state_from_json(const Json& j, int s, int r);

/// {"rows": [[[value, "cI", "dJ"], ...], ...]}; a bare array of rows is also accepted.
Json to_json(const TwoColoredGT& g);
TwoColoredGT pattern_from_json(const Json& j);

Json to_json(const ClassificationResult& c);
Json to_json(const YbeReport& rep);
Json to_json(const TrainReport& rep);
Json to_json(const MergeReport& rep);
Json to_json(const SolveStats& st);
Json to_json(const SweepReport& rep);

/// Reads and parses a JSON file; ParseError with the path on failure.
Json read_json_file(const std::string& path);

}  // namespace bicolor
