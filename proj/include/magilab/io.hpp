#pragma once

#include "magilab/graph.hpp"
#include "magilab/labeling.hpp"
#include "magilab/search.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace magilab {

using Json = nlohmann::ordered_json;

// {"vertex_count": n, "edges": [[u,v],...], "family": {"kind":..., "params":[...]}}
Json to_json(const Graph& g, const FamilyDescriptor* family = nullptr);
Json to_json(const FamilyHandle& handle);
/// Reads a graph document. When a family block is present the family is
/// rebuilt and must agree with the listed edges.
FamilyHandle handle_from_json(const Json& doc);
Graph graph_from_json(const Json& doc);

// {"vertex_labels": [...], "edge_labels": [...]}
Json to_json(const TotalLabeling& labeling);
TotalLabeling labeling_from_json(const Json& doc);
Json to_json(const VertexLabeling& labeling);

// {"k": ..., "b": ..., "super": ...} plus "small_side" when known
Json to_json(const LabelingClassification& classification);

// {"b": ..., "exhausted": ..., "constants": [...], "labelings": [...]}
Json to_json(const SearchReport& report);

/// Graph plus labeling in one document: {"graph": {...}, "labeling": {...}}.
struct LabeledGraph {
    FamilyHandle handle;
    TotalLabeling labeling;
};
Json to_json(const LabeledGraph& bundle);
LabeledGraph bundle_from_json(const Json& doc);

/// Graphviz export. Vertex and edge labels become node and edge labels.
std::string to_dot(const Graph& g, const TotalLabeling* labeling = nullptr, const FamilyHandle* names = nullptr);

} // namespace magilab
