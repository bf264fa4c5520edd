#include "magilab/labeling.hpp"

#include <algorithm>
#include <cstdlib>

namespace magilab {

bool is_bijection(const Graph& g, const TotalLabeling& labeling)
{
    if (static_cast<int>(labeling.vertex_labels.size()) != g.vertex_count()
        || static_cast<int>(labeling.edge_labels.size()) != g.edge_count())
        return false;
    const int total = g.vertex_count() + g.edge_count();
    std::vector<char> seen(static_cast<size_t>(total) + 1, 0);
    auto mark = [&](int label) {
        if (label < 1 || label > total || seen[static_cast<size_t>(label)])
            return false;
        seen[static_cast<size_t>(label)] = 1;
        return true;
    };
    return std::all_of(labeling.vertex_labels.begin(), labeling.vertex_labels.end(), mark)
        && std::all_of(labeling.edge_labels.begin(), labeling.edge_labels.end(), mark);
}

void check_bijection(const Graph& g, const TotalLabeling& labeling)
{
    if (static_cast<int>(labeling.vertex_labels.size()) != g.vertex_count()
        || static_cast<int>(labeling.edge_labels.size()) != g.edge_count())
        throw Error("label count does not match graph (" + std::to_string(labeling.vertex_labels.size()) + "+"
            + std::to_string(labeling.edge_labels.size()) + " labels for " + std::to_string(g.vertex_count()) + "+"
            + std::to_string(g.edge_count()) + " elements)");
    if (! is_bijection(g, labeling))
        throw Error("labels are not a bijection onto 1.." + std::to_string(g.vertex_count() + g.edge_count()));
}

std::optional<int> magic_constant_of(const Graph& g, const TotalLabeling& labeling)
{
    check_bijection(g, labeling);
    std::optional<int> constant;
    const auto edges = g.edges();
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        int sum = labeling.vertex_labels[static_cast<size_t>(u)] + labeling.vertex_labels[static_cast<size_t>(v)]
            + labeling.edge_labels[i];
        if (constant && *constant != sum)
            return std::nullopt;
        constant = sum;
    }
    return constant;
}

std::optional<int> consecutive_index_of(const Graph& g, const TotalLabeling& labeling)
{
    if (! magic_constant_of(g, labeling))
        return std::nullopt;
    // bijective edge labels form a block iff max - min == |E| - 1
    auto [lo, hi] = std::minmax_element(labeling.edge_labels.begin(), labeling.edge_labels.end());
    if (*hi - *lo != g.edge_count() - 1)
        return std::nullopt;
    int b = *lo - 1;
    if (b < 0 || b > g.vertex_count())
        return std::nullopt;
    return b;
}

bool neighbor_block_holds(const Graph& g, const TotalLabeling& labeling, int b)
{
    if (b < 1 || b > g.vertex_count())
        throw Error("neighbor block check needs 1 <= b <= |V|");
    check_bijection(g, labeling);
    for (int label : labeling.edge_labels)
        if (label <= b || label > b + g.edge_count())
            throw Error("edge labels are not {" + std::to_string(b + 1) + ".." + std::to_string(b + g.edge_count()) + "}");
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        int low = 0;
        int high = 0;
        for (Vertex y : g.neighbors(x))
            (labeling.vertex_labels[static_cast<size_t>(y)] <= b ? low : high)++;
        if (low > 0 && high > 0)
            return false;
    }
    return true;
}

bool is_graceful(const Graph& g, const VertexLabeling& labeling)
{
    if (static_cast<int>(labeling.vertex_labels.size()) != g.vertex_count())
        throw Error("vertex label count does not match graph");
    const int m = g.edge_count();
    std::vector<char> used(static_cast<size_t>(m) + 1, 0);
    for (int label : labeling.vertex_labels) {
        if (label < 0 || label > m || used[static_cast<size_t>(label)])
            throw Error("graceful candidate must use distinct labels from 0..|E|");
        used[static_cast<size_t>(label)] = 1;
    }
    std::vector<char> difference(static_cast<size_t>(m) + 1, 0);
    for (auto [u, v] : g.edges()) {
        int d = std::abs(labeling.vertex_labels[static_cast<size_t>(u)] - labeling.vertex_labels[static_cast<size_t>(v)]);
        if (d < 1 || d > m || difference[static_cast<size_t>(d)])
            return false;
        difference[static_cast<size_t>(d)] = 1;
    }
    return true;
}

std::optional<Side> small_label_side(const Bipartition& bipartition, const TotalLabeling& labeling, int b)
{
    for (Side s : { Side::X, Side::Y }) {
        if (bipartition.size(s) != b)
            continue;
        bool all_small = std::all_of(bipartition.side(s).begin(), bipartition.side(s).end(),
            [&](Vertex v) { return labeling.vertex_labels[static_cast<size_t>(v)] <= b; });
        if (all_small)
            return s;
    }
    return std::nullopt;
}

LabelingClassification classify(const Graph& g, const TotalLabeling& labeling, const Bipartition* bipartition)
{
    LabelingClassification result;
    if (! is_bijection(g, labeling))
        return result;
    result.magic_constant = magic_constant_of(g, labeling);
    result.consecutive_index = consecutive_index_of(g, labeling);
    result.is_super = result.consecutive_index == g.vertex_count();
    if (bipartition && result.consecutive_index && *result.consecutive_index > 0 && ! result.is_super)
        result.side_with_small_labels = small_label_side(*bipartition, labeling, *result.consecutive_index);
    return result;
}

} // namespace magilab
