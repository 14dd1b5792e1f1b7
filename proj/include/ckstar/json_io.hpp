#pragma once

#include "ckstar/cocycle.hpp"
#include "ckstar/spectrum.hpp"

#include <json.hpp>

namespace ckstar {

using Json = nlohmann::json;

/// {"vertices": [...], "edges": [{"id","range","source"}], "order": [...]}.
/// Throws Error(parse_error) on malformed documents and Error(invalid_graph)
/// on structural problems.
OrderedGraph graph_from_json(const Json& doc);
Json graph_to_json(const OrderedGraph& og);

EdgeWord word_from_json(const Graph& graph, const Json& ids);
Json word_to_json(const Graph& graph, const EdgeWord& word);

/// Monomial or cylinder: {"alpha": [...], "beta": [...], "anchor": "v"};
/// the anchor may be omitted when either path is nonempty.
CKMono mono_from_json(const Graph& graph, const Json& doc);
Json mono_to_json(const Graph& graph, const CKMono& m);

/// [{"alpha","beta","anchor","re","im"}].
AlgElement element_from_json(const Graph& graph, const Json& doc);
Json element_to_json(const Graph& graph, const AlgElement& a);

SpectrumSet spectrum_from_json(const Graph& graph, const Json& doc);
Json spectrum_to_json(const Graph& graph, const SpectrumSet& s);

/// {"prefix": [...], "cycle": [...]}.
EvPath evpath_from_json(const Graph& graph, const Json& doc);
Json evpath_to_json(const Graph& graph, const EvPath& x);

/// {"x": EvPath, "k": int, "y": EvPath}.
GroupoidPoint point_from_json(const Graph& graph, const Json& doc);
Json point_to_json(const Graph& graph, const GroupoidPoint& g);

/// {"depth": N, "table": [{"path": [...], "value": "p/q"}]}.
LocallyConstantFn function_from_json(const Graph& graph, const Json& doc);
Json function_to_json(const Graph& graph, const LocallyConstantFn& f);

Json coefficient_to_json(const Coefficient& c);

/// Reads and parses a JSON file; Error(parse_error) on failure.
Json read_json_file(const std::string& path);

}  // namespace ckstar
