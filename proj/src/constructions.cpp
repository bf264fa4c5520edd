#include "magilab/constructions.hpp"

namespace magilab {

namespace {

    // 1-based leaf count lookup with n(l) = 0 outside 1..r
    struct LeafCounts {
        const std::vector<int>& counts;
        int operator()(int l) const
        {
            if (l < 1 || l > static_cast<int>(counts.size()))
                return 0;
            return counts[static_cast<size_t>(l - 1)];
        }
    };

    void set_edge(const Graph& g, TotalLabeling& labeling, Vertex u, Vertex v, int label)
    {
        int e = g.edge_index(u, v);
        if (e < 0)
            throw Error("construction references a missing edge");
        labeling.edge_labels[static_cast<size_t>(e)] = label;
    }

    int total_labels(const Graph& g) { return g.vertex_count() + g.edge_count(); }

    struct SmallSide {
        Side side;
        int size;
        int other_size;
    };

    SmallSide require_small_side(const Graph& g, const Bipartition& bipartition, const TotalLabeling& labeling)
    {
        auto b = consecutive_index_of(g, labeling);
        if (! b || *b == 0 || *b == g.vertex_count())
            throw Error("labeling is not |X|- or |Y|-edge consecutive magic");
        auto side = small_label_side(bipartition, labeling, *b);
        if (! side)
            throw Error("no partite side carries the labels 1.." + std::to_string(*b));
        return { *side, *b, bipartition.size(opposite(*side)) };
    }

} // namespace

TotalLabeling caterpillar_beta_labeling(const CaterpillarSpec& spec)
{
    spec.validate();
    const auto handle = build_caterpillar(spec);
    const Graph& g = handle.graph;
    const LeafCounts n { spec.leaf_counts };
    const int r = spec.spine_length();
    const int alpha = spec.alpha();
    const int beta = spec.beta();
    const int top = alpha + 2 * beta;

    auto prefix = [&](int upto) {
        int total = 0;
        for (int l = 1; l <= upto; ++l)
            total += n(l);
        return total;
    };
    auto spine = [&](int s) { return handle.at("c" + std::to_string(s)); };
    auto leaf = [&](int s, int j) { return handle.at("c" + std::to_string(s) + "," + std::to_string(j)); };

    TotalLabeling labeling;
    labeling.vertex_labels.assign(static_cast<size_t>(g.vertex_count()), 0);
    labeling.edge_labels.assign(static_cast<size_t>(g.edge_count()), 0);
    auto vertex = [&](Vertex v) -> int& { return labeling.vertex_labels[static_cast<size_t>(v)]; };

    for (int i = 1; 2 * i - 1 <= r; ++i) {
        const int s = 2 * i - 1;
        int even_before = 0;
        int odd_before = 0;
        for (int l = 1; l <= i - 1; ++l) {
            even_before += n(2 * l);
            odd_before += n(2 * l - 1);
        }
        vertex(spine(s)) = top - 1 + even_before + i;
        for (int j = 1; j <= n(s); ++j) {
            vertex(leaf(s, j)) = odd_before + i + j - 1;
            set_edge(g, labeling, spine(s), leaf(s, j), top - 2 * i + 2 - prefix(2 * i - 2) - j);
        }
    }
    for (int i = 1; 2 * i <= r; ++i) {
        const int s = 2 * i;
        int even_before = 0;
        int odd_upto = 0;
        for (int l = 1; l <= i; ++l) {
            odd_upto += n(2 * l - 1);
            if (l < i)
                even_before += n(2 * l);
        }
        vertex(spine(s)) = odd_upto + i;
        for (int j = 1; j <= n(s); ++j) {
            vertex(leaf(s, j)) = top - 1 + even_before + i + j;
            set_edge(g, labeling, spine(s), leaf(s, j), top - 2 * i + 1 - prefix(2 * i - 1) - j);
        }
    }
    for (int i = 1; i <= r - 1; ++i)
        set_edge(g, labeling, spine(i), spine(i + 1), top - i - prefix(i));
    return labeling;
}

TotalLabeling caterpillar_super_labeling(const CaterpillarSpec& spec)
{
    const auto handle = build_caterpillar(spec);
    const int alpha = spec.alpha();
    const int beta = spec.beta();
    auto labeling = caterpillar_beta_labeling(spec);
    for (Vertex v = 0; v < handle.graph.vertex_count(); ++v)
        if (handle.bipartition->side_of(v) == Side::X)
            labeling.vertex_labels[static_cast<size_t>(v)] -= alpha + beta - 1;
    for (int& label : labeling.edge_labels)
        label += alpha;
    return labeling;
}

TotalLabeling double_star_consecutive(int m, int n, int variant)
{
    if (variant != 1 && variant != 2)
        throw Error("double star variant must be 1 or 2");
    const auto handle = build_double_star(m, n);
    const Graph& g = handle.graph;
    const int k = 4 * m + 2 * n + 6;
    // small side: v and the leaves of u, labels 1..m+1
    // large side: u and the leaves of v, labels 2m+n+3..2m+2n+3
    const int small_center = variant == 1 ? m + 1 : 1;
    const int large_center = variant == 1 ? 2 * m + n + 3 : 2 * m + 2 * n + 3;

    TotalLabeling labeling;
    labeling.vertex_labels.assign(static_cast<size_t>(g.vertex_count()), 0);
    labeling.edge_labels.assign(static_cast<size_t>(g.edge_count()), 0);
    labeling.vertex_labels[static_cast<size_t>(handle.at("v"))] = small_center;
    labeling.vertex_labels[static_cast<size_t>(handle.at("u"))] = large_center;

    int next = 1;
    for (int j = 1; j <= m; ++j) {
        if (next == small_center)
            ++next;
        labeling.vertex_labels[static_cast<size_t>(handle.at("u" + std::to_string(j)))] = next++;
    }
    next = 2 * m + n + 3;
    for (int j = 1; j <= n; ++j) {
        if (next == large_center)
            ++next;
        labeling.vertex_labels[static_cast<size_t>(handle.at("v" + std::to_string(j)))] = next++;
    }
    const auto edges = g.edges();
    for (size_t e = 0; e < edges.size(); ++e)
        labeling.edge_labels[e] = k - labeling.vertex_labels[static_cast<size_t>(edges[e].first)]
            - labeling.vertex_labels[static_cast<size_t>(edges[e].second)];
    return labeling;
}

TotalLabeling dual(const Graph& g, const TotalLabeling& labeling)
{
    if (! magic_constant_of(g, labeling))
        throw Error("dual requires an edge-magic labeling");
    const int mirror = total_labels(g) + 1;
    TotalLabeling result = labeling;
    for (int& label : result.vertex_labels)
        label = mirror - label;
    for (int& label : result.edge_labels)
        label = mirror - label;
    return result;
}

LambdaStarCase lambda_star_case(const Graph& g, const Bipartition* bipartition, const TotalLabeling& labeling)
{
    auto b = consecutive_index_of(g, labeling);
    if (! b)
        throw Error("lambda_star requires an edge consecutive magic labeling");
    if (*b == 0)
        return LambdaStarCase::BZero;
    if (*b == g.vertex_count())
        return LambdaStarCase::BFull;
    if (! bipartition)
        throw Error("lambda_star with 0 < b < |V| needs a bipartition");
    auto side = small_label_side(*bipartition, labeling, *b);
    if (! side)
        throw Error("b = " + std::to_string(*b) + " is not 0, |V|, or the size of a side carrying 1..b");
    return *side == Side::X ? LambdaStarCase::BX : LambdaStarCase::BY;
}

int lambda_star_constant(const Graph& g, const Bipartition* bipartition, LambdaStarCase which, int k)
{
    const int v = g.vertex_count();
    const int e = g.edge_count();
    switch (which) {
    case LambdaStarCase::BZero:
        return 2 * v + 5 * e + 3 - k;
    case LambdaStarCase::BFull:
        return 4 * v + e + 3 - k;
    case LambdaStarCase::BX:
    case LambdaStarCase::BY: {
        if (! bipartition)
            throw Error("side cases need a bipartition");
        const int x = bipartition->size(Side::X);
        const int y = bipartition->size(Side::Y);
        return which == LambdaStarCase::BX ? 5 * x + y + 3 * e + 3 - k : x + 5 * y + 3 * e + 3 - k;
    }
    }
    throw Error("unknown lambda_star case");
}

TotalLabeling lambda_star(const Graph& g, const Bipartition* bipartition, const TotalLabeling& labeling)
{
    const auto which = lambda_star_case(g, bipartition, labeling);
    const int v = g.vertex_count();
    const int e = g.edge_count();
    TotalLabeling result = labeling;
    auto reflect_all = [](std::vector<int>& labels, int mirror) {
        for (int& label : labels)
            label = mirror - label;
    };
    switch (which) {
    case LambdaStarCase::BZero:
        reflect_all(result.vertex_labels, v + 2 * e + 1);
        reflect_all(result.edge_labels, e + 1);
        break;
    case LambdaStarCase::BFull:
        reflect_all(result.vertex_labels, v + 1);
        reflect_all(result.edge_labels, 2 * v + e + 1);
        break;
    case LambdaStarCase::BX:
    case LambdaStarCase::BY: {
        const Side small = which == LambdaStarCase::BX ? Side::X : Side::Y;
        const int s = bipartition->size(small);
        const int o = bipartition->size(opposite(small));
        for (Vertex u = 0; u < v; ++u) {
            int& label = result.vertex_labels[static_cast<size_t>(u)];
            label = (bipartition->side_of(u) == small ? s + 1 : 2 * s + o + 2 * e + 1) - label;
        }
        reflect_all(result.edge_labels, 2 * s + e + 1);
        break;
    }
    }
    return result;
}

VertexLabeling to_graceful(const Graph& g, const Bipartition& bipartition, const TotalLabeling& labeling)
{
    const auto small = require_small_side(g, bipartition, labeling);
    VertexLabeling result;
    result.vertex_labels.resize(static_cast<size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const int label = labeling.vertex_labels[static_cast<size_t>(v)];
        result.vertex_labels[static_cast<size_t>(v)] = bipartition.side_of(v) == small.side
            ? label - 1
            : g.edge_count() + 2 * small.size + small.other_size - label;
    }
    return result;
}

TotalLabeling to_super_edge_magic(const Graph& g, const Bipartition& bipartition, const TotalLabeling& labeling)
{
    const auto small = require_small_side(g, bipartition, labeling);
    TotalLabeling result = labeling;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (bipartition.side_of(v) != small.side)
            result.vertex_labels[static_cast<size_t>(v)] -= g.edge_count();
    for (int& label : result.edge_labels)
        label += small.other_size;
    return result;
}

} // namespace magilab
