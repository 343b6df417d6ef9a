#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "grmlab/chains.hpp"
#include "grmlab/grmeasure.hpp"
#include "grmlab/module.hpp"
#include "grmlab/quiver.hpp"

namespace grmlab::cli {

using json = nlohmann::ordered_json;

AlgebraSpec parse_algebra(const json& j);
json algebra_to_json(const AlgebraSpec& spec);
/// A path to a JSON file, or one of the built-in names lambda1, lambda2, kronecker.
AlgebraPtr load_algebra(const std::string& path_or_name);
/// Built-in algebra files by name, or an empty string.
std::string builtin_algebra(const std::string& name);

/// "P:v", "I:v", "S:v", "Lambda", "DLambda" joined by "+", or an explicit JSON
/// object {"dims": {...}, "arrows": {...}}.
Representation parse_module(const AlgebraPtr& algebra, const std::string& expr);
Representation parse_module(const AlgebraPtr& algebra, const json& j);
json module_to_json(const Representation& m);
json dims_to_json(const Representation& m);
json dims_to_json(const AlgebraPtr& algebra, const std::vector<std::size_t>& dims);

/// Comma-separated positive rationals, one per vertex.
LengthFunction parse_weights(const AlgebraPtr& algebra, const std::string& text);
std::vector<std::string> weights_to_strings(const LengthFunction& lambda);

json measure_to_json(const MeasureValue& m);

/// Chain file: {"steps": [expr-or-module, ...]}.
std::vector<Representation> parse_chain_steps(const AlgebraPtr& algebra, const json& j);

std::string read_file(const std::string& path);

/// One "path<TAB>value" line per scalar leaf, in document order.
std::string to_tsv(const json& j);

}  // namespace grmlab::cli
