#pragma once

#include "magilab/graph.hpp"
#include "magilab/labeling.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace magilab {

/// Search refused because |V|+|E| exceeds the label budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

inline constexpr int kDefaultLabelBudget = 22;
/// Hard ceiling imposed by the 64-bit label sets used by the search.
inline constexpr int kMaxLabelBudget = 63;

/// MAGILAB_BUDGET from the environment, else kDefaultLabelBudget.
int default_label_budget();

struct SearchQuery {
    Graph graph;
    /// Target consecutive index; absent means any edge-magic labeling.
    std::optional<int> b;
    std::optional<int> magic_constant;
    /// Stop after this many labelings (taken in increasing k).
    std::optional<std::size_t> limit;
    /// Keep one labeling per permutation of twin vertices (vertices with
    /// equal neighbourhoods): twins get increasing labels.
    bool canonical_only = false;
    /// Enables the neighbour-block rule as a pruning step. Off by default so
    /// the search stays independent of the results it is used to verify.
    bool use_theorem_pruning = false;
    int budget = default_label_budget();
    /// Worker threads for the k loop; 0 picks hardware concurrency.
    unsigned workers = 0;
};

struct SearchReport {
    std::optional<int> b;
    /// Sorted lexicographically by vertex labels.
    std::vector<TotalLabeling> labelings;
    std::set<int> constants_found;
    /// False when the limit cut the enumeration short.
    bool exhausted = true;
};

/// All b-edge consecutive magic labelings (query.b required).
SearchReport find_consecutive(const SearchQuery& query);

/// All edge-magic total labelings (query.b ignored).
SearchReport find_edge_magic(const SearchQuery& query);

/// One witness labeling per feasible b in 0..|V|; infeasible values are
/// absent after an exhaustive search.
std::map<int, TotalLabeling> feasible_b_witnesses(const Graph& g, int budget = default_label_budget());

/// {b : g has a b-edge consecutive magic labeling}.
std::set<int> feasible_b_set(const Graph& g, int budget = default_label_budget());

/// Graceful labelings by direct backtracking over vertex labels 0..|E|.
std::vector<VertexLabeling> find_graceful(const Graph& g, std::optional<std::size_t> limit = std::nullopt);

/// Vertex permutations preserving adjacency; perm[v] is the image of v.
struct AutomorphismGroup {
    std::vector<std::vector<Vertex>> permutations;
    std::size_t order() const { return permutations.size(); }
};

inline constexpr int kMaxAutomorphismVertices = 16;

/// Exact automorphism group via degree refinement and backtracking.
AutomorphismGroup automorphisms(const Graph& g, std::size_t max_order = 1'000'000);

/// The labeling moved by an automorphism: result(perm[v]) = labeling(v).
TotalLabeling apply_automorphism(const Graph& g, const std::vector<Vertex>& perm, const TotalLabeling& labeling);

struct OrbitCount {
    std::size_t orbits = 0;
    std::size_t raw = 0;
    std::set<int> constants;
};

/// Number of automorphism orbits among the b-edge consecutive magic
/// labelings of g, alongside the raw count.
OrbitCount count_canonical(const Graph& g, int b, const AutomorphismGroup& group, int budget = default_label_budget());

} // namespace magilab
