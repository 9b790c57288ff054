#pragma once

#include <iosfwd>
#include <string>
#include <utility>

#include <json.hpp>

#include "crn/bundles.hpp"
#include "crn/classify.hpp"
#include "crn/dynamics.hpp"
#include "crn/network.hpp"

namespace crn::io {

using Json = nlohmann::json;

// Network document: {"species":[..],"vertices":[[..]],"edges":[{"src":0,"dst":1,"rate":"3/2"}]}.
// A missing rate reads as 1.
Json to_json(const MassActionSystem& sys);
MassActionSystem system_from_json(const Json& doc);

// Field document: {"species":[..],"field":["1 - x", ..]}.
Json field_to_json(const PolyVector& f, const SpeciesList& species);
std::pair<SpeciesList, PolyVector> field_from_json(const Json& doc);

Json to_json(const ExampleBundle& bundle);
Json to_json(const ClassificationReport& report, const SpeciesList& species);

/// Parses text; syntax errors become Parse errors carrying the byte offset.
Json parse_json(const std::string& text, const std::string& origin);
Json read_json_file(const std::string& path);

/// Network, bundle (uses the full network) or field (canonical realization) documents.
MassActionSystem read_system(const Json& doc);
/// Field, network (its mass-action field) or bundle (full field) documents.
std::pair<SpeciesList, PolyVector> read_field(const Json& doc);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& doc);

/// "x+2y"; the zero complex prints as "0".
std::string complex_label(const Exponent& e, const SpeciesList& species);
std::string to_dot(const MassActionSystem& sys);

/// Shortest text that reads back to the same double.
std::string format_double(double v);

void write_trajectory_csv(std::ostream& out, const dynamics::Trajectory& traj, const SpeciesList& species);
void write_grid_csv(std::ostream& out, const std::vector<dynamics::GridPoint>& grid, const SpeciesList& species);

}  // namespace crn::io
