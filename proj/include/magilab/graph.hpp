#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace magilab {

/// Raised for malformed inputs and violated preconditions.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..n-1.
///
/// Edges are kept in canonical order: each pair sorted (u < v), then the
/// list sorted lexicographically. Edge indices used by labelings refer to
/// this order.
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    std::span<const Edge> edges() const { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<size_t>(v)].size()); }

    /// Index of edge uv in canonical order, or -1.
    int edge_index(Vertex u, Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const { return edge_index(u, v) >= 0; }

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
    }

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<int> edge_id_; // dense n*n table
};

enum class Side : std::uint8_t { X, Y };

inline Side opposite(Side s) { return s == Side::X ? Side::Y : Side::X; }

/// Ordered two-colouring (X, Y) of a bipartite graph.
class Bipartition {
public:
    Bipartition() = default;
    /// `side_of[v]` gives the side of vertex v. Every edge of `g` must cross.
    Bipartition(const Graph& g, std::vector<Side> side_of);

    Side side_of(Vertex v) const { return side_of_[static_cast<size_t>(v)]; }
    const std::vector<Vertex>& side(Side s) const { return s == Side::X ? x_ : y_; }
    const std::vector<Vertex>& x() const { return x_; }
    const std::vector<Vertex>& y() const { return y_; }
    int size(Side s) const { return static_cast<int>(side(s).size()); }

    friend bool operator==(const Bipartition&, const Bipartition&) = default;

private:
    std::vector<Side> side_of_;
    std::vector<Vertex> x_;
    std::vector<Vertex> y_;
};

/// Caterpillar S_{n_1..n_r}: spine c_1..c_r, n_i leaves hung on c_i.
struct CaterpillarSpec {
    std::vector<int> leaf_counts;

    int spine_length() const { return static_cast<int>(leaf_counts.size()); }
    int vertex_count() const;
    /// Size of the side holding the odd spine vertices and even-spine leaves.
    int alpha() const;
    /// Size of the side holding the even spine vertices and odd-spine leaves.
    int beta() const;
    void validate() const;

    friend bool operator==(const CaterpillarSpec&, const CaterpillarSpec&) = default;
};

/// Parses "2,1,2" into a spec. Throws Error on malformed input.
CaterpillarSpec parse_spine(const std::string& text);

/// Describes how a graph was generated, for serialization.
struct FamilyDescriptor {
    std::string kind; // caterpillar, double_star, lobster, cycle, kmn, path, star
    std::vector<int> params;

    friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
};

/// A generated graph together with its structural vertex names.
struct FamilyHandle {
    Graph graph;
    std::optional<Bipartition> bipartition;
    std::map<std::string, Vertex> name_map;
    FamilyDescriptor family;

    Vertex at(const std::string& name) const;
};

FamilyHandle build_caterpillar(const CaterpillarSpec& spec);
FamilyHandle build_double_star(int m, int n);
FamilyHandle build_lobster(int p);
FamilyHandle build_cycle(int length);
FamilyHandle build_complete_bipartite(int m, int n);
FamilyHandle build_path(int vertex_count);
FamilyHandle build_star(int leaves);

/// Rebuilds a handle from a descriptor (used when reading JSON).
FamilyHandle build_family(const FamilyDescriptor& family);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// BFS two-colouring with vertex 0 on side X. Returns nullopt when an odd
/// cycle exists. Throws Error for disconnected input.
std::optional<Bipartition> bipartition_of(const Graph& g);

} // namespace magilab
