#include "magilab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>

namespace magilab {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count)
    , edges_(std::move(edges))
{
    if (vertex_count_ < 0)
        throw Error("negative vertex count");
    for (auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_)
            throw Error("edge endpoint out of range");
        if (u == v)
            throw Error("self-loop on vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw Error("duplicate edge");

    const auto n = static_cast<size_t>(vertex_count_);
    adjacency_.assign(n, {});
    edge_id_.assign(n * n, -1);
    for (size_t i = 0; i < edges_.size(); ++i) {
        auto [u, v] = edges_[i];
        adjacency_[static_cast<size_t>(u)].push_back(v);
        adjacency_[static_cast<size_t>(v)].push_back(u);
        edge_id_[static_cast<size_t>(u) * n + static_cast<size_t>(v)] = static_cast<int>(i);
        edge_id_[static_cast<size_t>(v) * n + static_cast<size_t>(u)] = static_cast<int>(i);
    }
    for (auto& adj : adjacency_)
        std::sort(adj.begin(), adj.end());
}

int Graph::edge_index(Vertex u, Vertex v) const
{
    if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_)
        return -1;
    return edge_id_[static_cast<size_t>(u) * static_cast<size_t>(vertex_count_) + static_cast<size_t>(v)];
}

Bipartition::Bipartition(const Graph& g, std::vector<Side> side_of)
    : side_of_(std::move(side_of))
{
    if (static_cast<int>(side_of_.size()) != g.vertex_count())
        throw Error("bipartition size does not match graph");
    for (auto [u, v] : g.edges())
        if (side_of_[static_cast<size_t>(u)] == side_of_[static_cast<size_t>(v)])
            throw Error("edge " + std::to_string(u) + "-" + std::to_string(v) + " does not cross the bipartition");
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        (side_of_[static_cast<size_t>(v)] == Side::X ? x_ : y_).push_back(v);
}

int CaterpillarSpec::vertex_count() const
{
    return std::accumulate(leaf_counts.begin(), leaf_counts.end(), 0) + spine_length();
}

int CaterpillarSpec::alpha() const
{
    // odd spine vertices plus leaves of even spine vertices (1-based)
    int total = (spine_length() + 1) / 2;
    for (size_t i = 1; i < leaf_counts.size(); i += 2)
        total += leaf_counts[i];
    return total;
}

int CaterpillarSpec::beta() const
{
    int total = spine_length() / 2;
    for (size_t i = 0; i < leaf_counts.size(); i += 2)
        total += leaf_counts[i];
    return total;
}

void CaterpillarSpec::validate() const
{
    if (leaf_counts.empty())
        throw Error("caterpillar spine length must be positive");
    for (int n : leaf_counts)
        if (n < 0)
            throw Error("caterpillar leaf counts must be nonnegative");
}

CaterpillarSpec parse_spine(const std::string& text)
{
    CaterpillarSpec spec;
    size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos)
            comma = text.size();
        std::string_view field(text.data() + pos, comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
            throw Error("malformed spine spec '" + text + "'");
        spec.leaf_counts.push_back(value);
        pos = comma + 1;
    }
    spec.validate();
    return spec;
}

Vertex FamilyHandle::at(const std::string& name) const
{
    auto it = name_map.find(name);
    if (it == name_map.end())
        throw Error("no vertex named '" + name + "'");
    return it->second;
}

namespace {

    std::vector<Side> two_colour(const Graph& g)
    {
        std::vector<int> colour(static_cast<size_t>(g.vertex_count()), -1);
        std::vector<Side> sides(colour.size(), Side::X);
        if (colour.empty())
            return sides;
        std::queue<Vertex> queue;
        colour[0] = 0;
        queue.push(0);
        while (! queue.empty()) {
            Vertex u = queue.front();
            queue.pop();
            for (Vertex w : g.neighbors(u))
                if (colour[static_cast<size_t>(w)] < 0) {
                    colour[static_cast<size_t>(w)] = 1 - colour[static_cast<size_t>(u)];
                    queue.push(w);
                }
        }
        for (size_t i = 0; i < colour.size(); ++i)
            sides[i] = colour[i] == 1 ? Side::Y : Side::X;
        return sides;
    }

} // namespace

FamilyHandle build_caterpillar(const CaterpillarSpec& spec)
{
    spec.validate();
    FamilyHandle handle;
    std::vector<Edge> edges;
    std::vector<Side> sides;
    Vertex previous_spine = -1;
    for (int i = 1; i <= spec.spine_length(); ++i) {
        const bool odd = i % 2 == 1;
        Vertex c = static_cast<Vertex>(sides.size());
        handle.name_map["c" + std::to_string(i)] = c;
        sides.push_back(odd ? Side::X : Side::Y);
        if (previous_spine >= 0)
            edges.emplace_back(previous_spine, c);
        for (int j = 1; j <= spec.leaf_counts[static_cast<size_t>(i - 1)]; ++j) {
            Vertex leaf = static_cast<Vertex>(sides.size());
            handle.name_map["c" + std::to_string(i) + "," + std::to_string(j)] = leaf;
            sides.push_back(odd ? Side::Y : Side::X);
            edges.emplace_back(c, leaf);
        }
        previous_spine = c;
    }
    handle.graph = Graph(static_cast<int>(sides.size()), std::move(edges));
    handle.bipartition = Bipartition(handle.graph, std::move(sides));
    handle.family = { "caterpillar", spec.leaf_counts };
    return handle;
}

FamilyHandle build_double_star(int m, int n)
{
    if (m < 1 || n < 1)
        throw Error("double star needs m, n >= 1");
    auto handle = build_caterpillar(CaterpillarSpec { { m, n } });
    std::map<std::string, Vertex> names;
    names["u"] = handle.at("c1");
    names["v"] = handle.at("c2");
    for (int j = 1; j <= m; ++j)
        names["u" + std::to_string(j)] = handle.at("c1," + std::to_string(j));
    for (int j = 1; j <= n; ++j)
        names["v" + std::to_string(j)] = handle.at("c2," + std::to_string(j));
    handle.name_map = std::move(names);
    handle.family = { "double_star", { m, n } };
    return handle;
}

FamilyHandle build_lobster(int p)
{
    if (p < 1)
        throw Error("lobster needs p >= 1");
    FamilyHandle handle;
    // order: x, y_1..y_p, x_1..x_p
    std::vector<Edge> edges;
    std::vector<Side> sides(static_cast<size_t>(2 * p + 1), Side::X);
    handle.name_map["x"] = 0;
    for (int i = 1; i <= p; ++i) {
        Vertex y = i;
        Vertex x = p + i;
        handle.name_map["y" + std::to_string(i)] = y;
        handle.name_map["x" + std::to_string(i)] = x;
        sides[static_cast<size_t>(y)] = Side::Y;
        edges.emplace_back(0, y);
        edges.emplace_back(y, x);
    }
    handle.graph = Graph(2 * p + 1, std::move(edges));
    handle.bipartition = Bipartition(handle.graph, std::move(sides));
    handle.family = { "lobster", { p } };
    return handle;
}

FamilyHandle build_cycle(int length)
{
    if (length < 3)
        throw Error("cycle length must be at least 3");
    FamilyHandle handle;
    std::vector<Edge> edges;
    for (int i = 0; i < length; ++i) {
        edges.emplace_back(i, (i + 1) % length);
        handle.name_map["v" + std::to_string(i)] = i;
    }
    handle.graph = Graph(length, std::move(edges));
    if (length % 2 == 0)
        handle.bipartition = Bipartition(handle.graph, two_colour(handle.graph));
    handle.family = { "cycle", { length } };
    return handle;
}

FamilyHandle build_complete_bipartite(int m, int n)
{
    if (m < 1 || n < 1)
        throw Error("complete bipartite graph needs m, n >= 1");
    FamilyHandle handle;
    std::vector<Edge> edges;
    std::vector<Side> sides;
    for (int i = 0; i < m; ++i) {
        handle.name_map["a" + std::to_string(i + 1)] = i;
        sides.push_back(Side::X);
    }
    for (int j = 0; j < n; ++j) {
        handle.name_map["b" + std::to_string(j + 1)] = m + j;
        sides.push_back(Side::Y);
        for (int i = 0; i < m; ++i)
            edges.emplace_back(i, m + j);
    }
    handle.graph = Graph(m + n, std::move(edges));
    handle.bipartition = Bipartition(handle.graph, std::move(sides));
    handle.family = { "kmn", { m, n } };
    return handle;
}

FamilyHandle build_path(int vertex_count)
{
    if (vertex_count < 1)
        throw Error("path needs at least one vertex");
    FamilyHandle handle;
    std::vector<Edge> edges;
    for (int i = 0; i < vertex_count; ++i) {
        handle.name_map["v" + std::to_string(i)] = i;
        if (i > 0)
            edges.emplace_back(i - 1, i);
    }
    handle.graph = Graph(vertex_count, std::move(edges));
    handle.bipartition = Bipartition(handle.graph, two_colour(handle.graph));
    handle.family = { "path", { vertex_count } };
    return handle;
}

FamilyHandle build_star(int leaves)
{
    if (leaves < 1)
        throw Error("star needs at least one leaf");
    auto handle = build_caterpillar(CaterpillarSpec { { leaves } });
    handle.family = { "star", { leaves } };
    return handle;
}

FamilyHandle build_family(const FamilyDescriptor& family)
{
    auto need = [&](size_t count) {
        if (family.params.size() != count)
            throw Error("family '" + family.kind + "' expects " + std::to_string(count) + " parameters");
    };
    if (family.kind == "caterpillar")
        return build_caterpillar(CaterpillarSpec { family.params });
    if (family.kind == "double_star") {
        need(2);
        return build_double_star(family.params[0], family.params[1]);
    }
    if (family.kind == "kmn") {
        need(2);
        return build_complete_bipartite(family.params[0], family.params[1]);
    }
    need(1);
    if (family.kind == "lobster")
        return build_lobster(family.params[0]);
    if (family.kind == "cycle")
        return build_cycle(family.params[0]);
    if (family.kind == "path")
        return build_path(family.params[0]);
    if (family.kind == "star")
        return build_star(family.params[0]);
    throw Error("unknown graph family '" + family.kind + "'");
}

bool is_connected(const Graph& g)
{
    if (g.vertex_count() <= 1)
        return true;
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<Vertex> stack { 0 };
    seen[0] = 1;
    int reached = 1;
    while (! stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(u))
            if (! seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == g.vertex_count();
}

bool is_tree(const Graph& g)
{
    return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

std::optional<Bipartition> bipartition_of(const Graph& g)
{
    if (! is_connected(g))
        throw Error("bipartition_of requires a connected graph");
    auto sides = two_colour(g);
    for (auto [u, v] : g.edges())
        if (sides[static_cast<size_t>(u)] == sides[static_cast<size_t>(v)])
            return std::nullopt;
    return Bipartition(g, std::move(sides));
}

} // namespace magilab
