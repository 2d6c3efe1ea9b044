#pragma once

#include <filesystem>
#include <variant>

#include <nlohmann/json.hpp>

#include "phasecomp/decomposition.hpp"
#include "phasecomp/partial_matrix.hpp"

// JSON formats use 1-based vertex indices; everything in memory is 0-based.
namespace phasecomp::io {

using Json = nlohmann::ordered_json;

/// {"n": N, "edges": [[i, j], ...]}. Undirected patterns get implied
/// self-loops; with "directed": true the arcs (including loops) are explicit.
PatternGraph pattern_from_json(const Json& j);
DirectedPatternGraph directed_pattern_from_json(const Json& j);
bool is_directed(const Json& j);
Json to_json(const PatternGraph& g);
Json to_json(const DirectedPatternGraph& g);

/// {"n": N, "entries": [[i, j, re, im], ...]}; omitted entries are zero.
ComplexMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const ComplexMatrix& m);

/// {"n": N, "edges": [...], "values": [[i, j, re, im], ...]}. Every
/// specified position (both orientations, and the diagonal for undirected
/// patterns) must be listed exactly once.
PartialMatrix partial_from_json(const Json& j);
DirectedPartialMatrix directed_partial_from_json(const Json& j);
Json to_json(const PartialMatrix& pm);

/// A file holding either a full matrix ("entries") or a partial matrix
/// ("values").
using MatrixInput = std::variant<ComplexMatrix, PartialMatrix>;
MatrixInput matrix_input_from_json(const Json& j);

Json to_json(const CliqueDecomposition& d);
CliqueDecomposition decomposition_from_json(const Json& j, int n);

/// Parses a JSON file; parse errors carry line and column.
Json load_json_file(const std::filesystem::path& path);
void save_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace phasecomp::io
