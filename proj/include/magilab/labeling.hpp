#pragma once

#include "magilab/graph.hpp"

#include <optional>
#include <vector>

namespace magilab {

/// Bijection from V ∪ E onto {1, ..., |V|+|E|}. Edge labels follow the
/// graph's canonical edge order.
struct TotalLabeling {
    std::vector<int> vertex_labels;
    std::vector<int> edge_labels;

    friend bool operator==(const TotalLabeling&, const TotalLabeling&) = default;
    friend auto operator<=>(const TotalLabeling&, const TotalLabeling&) = default;
};

/// Injective vertex labeling into {0, ..., |E|}.
struct VertexLabeling {
    std::vector<int> vertex_labels;

    friend bool operator==(const VertexLabeling&, const VertexLabeling&) = default;
};

struct LabelingClassification {
    std::optional<int> magic_constant;
    std::optional<int> consecutive_index;
    bool is_super = false;
    /// Partite side whose labels are exactly {1..b}, when b is |X| or |Y|.
    std::optional<Side> side_with_small_labels;

    friend bool operator==(const LabelingClassification&, const LabelingClassification&) = default;
};

/// Throws Error unless `labeling` is sized for `g` and is a bijection onto
/// {1..|V|+|E|}.
void check_bijection(const Graph& g, const TotalLabeling& labeling);
bool is_bijection(const Graph& g, const TotalLabeling& labeling);

/// Common edge sum, or nullopt when sums differ or the graph has no edges.
std::optional<int> magic_constant_of(const Graph& g, const TotalLabeling& labeling);

/// b such that edge labels are exactly {b+1..b+|E|} with 0 <= b <= |V|,
/// provided the labeling is also edge-magic.
std::optional<int> consecutive_index_of(const Graph& g, const TotalLabeling& labeling);

/// Every vertex sees all its neighbours inside {1..b} or all inside
/// {b+|E|+1..|V|+|E|}. Requires 1 <= b <= |V| and edge labels
/// {b+1..b+|E|}; the magic condition itself is not checked, so a corrupted
/// labeling is reported as false rather than rejected.
bool neighbor_block_holds(const Graph& g, const TotalLabeling& labeling, int b);

/// True iff endpoint differences are exactly {1..|E|}.
bool is_graceful(const Graph& g, const VertexLabeling& labeling);

/// Side of `bipartition` whose labels are exactly {1..b}, if any.
std::optional<Side> small_label_side(const Bipartition& bipartition, const TotalLabeling& labeling, int b);

/// `bipartition` may be null for non-bipartite graphs.
LabelingClassification classify(const Graph& g, const TotalLabeling& labeling, const Bipartition* bipartition = nullptr);

} // namespace magilab
