#include "magilab/io.hpp"

#include <sstream>

namespace magilab {

namespace {

    template <typename T>
    T field(const Json& doc, const char* key)
    {
        if (! doc.is_object() || ! doc.contains(key))
            throw Error(std::string("missing JSON field '") + key + "'");
        try {
            return doc.at(key).get<T>();
        } catch (const nlohmann::json::exception& e) {
            throw Error(std::string("bad JSON field '") + key + "': " + e.what());
        }
    }

} // namespace

Json to_json(const Graph& g, const FamilyDescriptor* family)
{
    Json doc;
    doc["vertex_count"] = g.vertex_count();
    Json edges = Json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({ u, v });
    doc["edges"] = std::move(edges);
    if (family && ! family->kind.empty())
        doc["family"] = { { "kind", family->kind }, { "params", family->params } };
    return doc;
}

Json to_json(const FamilyHandle& handle) { return to_json(handle.graph, &handle.family); }

Graph graph_from_json(const Json& doc)
{
    auto pairs = field<std::vector<std::vector<int>>>(doc, "edges");
    std::vector<Edge> edges;
    for (const auto& p : pairs) {
        if (p.size() != 2)
            throw Error("each edge must be a pair [u, v]");
        edges.emplace_back(p[0], p[1]);
    }
    return Graph(field<int>(doc, "vertex_count"), std::move(edges));
}

FamilyHandle handle_from_json(const Json& doc)
{
    Graph g = graph_from_json(doc);
    if (doc.contains("family")) {
        FamilyDescriptor family { field<std::string>(doc["family"], "kind"),
            field<std::vector<int>>(doc["family"], "params") };
        FamilyHandle handle = build_family(family);
        if (! (handle.graph == g))
            throw Error("edges do not match the declared '" + family.kind + "' family");
        return handle;
    }
    FamilyHandle handle;
    handle.bipartition = is_connected(g) ? bipartition_of(g) : std::nullopt;
    handle.graph = std::move(g);
    return handle;
}

Json to_json(const TotalLabeling& labeling)
{
    return { { "vertex_labels", labeling.vertex_labels }, { "edge_labels", labeling.edge_labels } };
}

TotalLabeling labeling_from_json(const Json& doc)
{
    return { field<std::vector<int>>(doc, "vertex_labels"), field<std::vector<int>>(doc, "edge_labels") };
}

Json to_json(const VertexLabeling& labeling) { return { { "vertex_labels", labeling.vertex_labels } }; }

Json to_json(const LabelingClassification& c)
{
    Json doc;
    doc["k"] = c.magic_constant ? Json(*c.magic_constant) : Json(nullptr);
    doc["b"] = c.consecutive_index ? Json(*c.consecutive_index) : Json(nullptr);
    doc["super"] = c.is_super;
    if (c.side_with_small_labels)
        doc["small_side"] = *c.side_with_small_labels == Side::X ? "X" : "Y";
    return doc;
}

Json to_json(const SearchReport& report)
{
    Json doc;
    doc["b"] = report.b ? Json(*report.b) : Json(nullptr);
    doc["exhausted"] = report.exhausted;
    doc["constants"] = report.constants_found;
    Json labelings = Json::array();
    for (const auto& l : report.labelings)
        labelings.push_back(to_json(l));
    doc["labelings"] = std::move(labelings);
    return doc;
}

Json to_json(const LabeledGraph& bundle)
{
    return { { "graph", to_json(bundle.handle) }, { "labeling", to_json(bundle.labeling) } };
}

LabeledGraph bundle_from_json(const Json& doc)
{
    if (! doc.is_object() || ! doc.contains("graph") || ! doc.contains("labeling"))
        throw Error("expected a document with 'graph' and 'labeling'");
    return { handle_from_json(doc["graph"]), labeling_from_json(doc["labeling"]) };
}

std::string to_dot(const Graph& g, const TotalLabeling* labeling, const FamilyHandle* names)
{
    std::vector<std::string> display(static_cast<size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        display[static_cast<size_t>(v)] = std::to_string(v);
    if (names)
        for (const auto& [name, v] : names->name_map)
            display[static_cast<size_t>(v)] = name;

    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v << " [label=\"";
        if (labeling)
            out << labeling->vertex_labels[static_cast<size_t>(v)];
        else
            out << display[static_cast<size_t>(v)];
        out << "\", tooltip=\"" << display[static_cast<size_t>(v)] << "\"];\n";
    }
    const auto edges = g.edges();
    for (size_t e = 0; e < edges.size(); ++e) {
        out << "  " << edges[e].first << " -- " << edges[e].second;
        if (labeling)
            out << " [label=\"" << labeling->edge_labels[e] << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace magilab
