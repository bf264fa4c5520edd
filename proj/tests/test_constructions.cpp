#include "magilab/constructions.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <set>
#include <string>

using namespace magilab;

namespace {

// Common edge sum computed directly, or -1 when sums differ.
int direct_constant(const Graph& g, const TotalLabeling& l)
{
    int k = oracle::edge_sum(g, l, 0);
    for (size_t e = 1; e < static_cast<size_t>(g.edge_count()); ++e)
        if (oracle::edge_sum(g, l, e) != k)
            return -1;
    return k;
}

bool direct_bijection(const Graph& g, const TotalLabeling& l)
{
    std::set<int> seen(l.vertex_labels.begin(), l.vertex_labels.end());
    seen.insert(l.edge_labels.begin(), l.edge_labels.end());
    const int total = g.vertex_count() + g.edge_count();
    return static_cast<int>(l.vertex_labels.size()) == g.vertex_count()
        && static_cast<int>(l.edge_labels.size()) == g.edge_count() && static_cast<int>(seen.size()) == total
        && *seen.begin() == 1 && *seen.rbegin() == total;
}

std::string describe_spec(const CaterpillarSpec& spec)
{
    std::string out;
    for (int n : spec.leaf_counts)
        out += (out.empty() ? "" : ",") + std::to_string(n);
    return out;
}

std::vector<CaterpillarSpec> grid(int max_r, int max_leaves)
{
    std::vector<CaterpillarSpec> out;
    for (int r = 1; r <= max_r; ++r) {
        std::vector<int> counts(static_cast<size_t>(r), 0);
        while (true) {
            if (r > 1 || counts[0] > 0)
                out.push_back({ counts });
            size_t i = 0;
            while (i < counts.size() && counts[i] == max_leaves)
                counts[i++] = 0;
            if (i == counts.size())
                break;
            ++counts[i];
        }
    }
    return out;
}

// Expected constant after block reversal, written out case by case.
int reversed_constant(int v, int e, int x, int y, int b, int k, bool small_is_x)
{
    if (b == 0)
        return 2 * v + 5 * e + 3 - k;
    if (b == v)
        return 4 * v + e + 3 - k;
    if (small_is_x)
        return 5 * x + y + 3 * e + 3 - k;
    return x + 5 * y + 3 * e + 3 - k;
}

// Dual and reversal contracts on one labeling with a known b.
void check_transforms(const Graph& g, const Bipartition* bip, const TotalLabeling& l)
{
    const int v = g.vertex_count();
    const int e = g.edge_count();
    const int k = direct_constant(g, l);
    const int b = oracle::block_start(g, l);
    REQUIRE(k > 0);
    REQUIRE(b >= 0);

    auto d = dual(g, l);
    CHECK(direct_bijection(g, d));
    CHECK(direct_constant(g, d) == 3 * (v + e + 1) - k);
    CHECK(oracle::block_start(g, d) == v - b);
    CHECK(dual(g, d) == l);

    std::optional<Side> small;
    if (b > 0 && b < v) {
        REQUIRE(bip);
        small = small_label_side(*bip, l, b);
        REQUIRE(small);
    }
    auto r = lambda_star(g, bip, l);
    int x = bip ? bip->size(Side::X) : 0;
    int y = bip ? bip->size(Side::Y) : 0;
    CHECK(direct_bijection(g, r));
    CHECK(direct_constant(g, r) == reversed_constant(v, e, x, y, b, k, small == Side::X));
    CHECK(oracle::block_start(g, r) == b);
    CHECK(lambda_star(g, bip, r) == l);
}

} // namespace

TEST_CASE("caterpillar beta labeling examples")
{
    auto p4 = build_caterpillar({ { 1, 1 } });
    auto l = caterpillar_beta_labeling({ { 1, 1 } });
    CHECK(l.vertex_labels == std::vector<int> { 6, 1, 2, 7 });
    // canonical edges: (c1,c1,1), (c1,c2), (c2,c2,1)
    CHECK(l.edge_labels == std::vector<int> { 5, 4, 3 });
    CHECK(direct_constant(p4.graph, l) == 12);
    CHECK(oracle::block_start(p4.graph, l) == 2);

    auto star = build_caterpillar({ { 3 } });
    auto ls = caterpillar_beta_labeling({ { 3 } });
    CHECK(direct_constant(star.graph, ls) == 2 * 1 + 4 * 3);
    CHECK(oracle::block_start(star.graph, ls) == 3);

    auto h = build_caterpillar({ { 2, 1, 2 } });
    auto lh = caterpillar_beta_labeling({ { 2, 1, 2 } });
    CHECK(direct_constant(h.graph, lh) == 26);
    CHECK(oracle::block_start(h.graph, lh) == 5);
    auto c = classify(h.graph, lh, &*h.bipartition);
    CHECK(c.side_with_small_labels == Side::Y);
}

TEST_CASE("caterpillar beta labeling over the r <= 5, n_i <= 3 grid")
{
    auto specs = grid(5, 3);
    CHECK(specs.size() == 4 + 16 + 64 + 256 + 1024 - 1);
    for (const auto& spec : specs) {
        auto h = build_caterpillar(spec);
        auto l = caterpillar_beta_labeling(spec);
        // side sizes counted directly from the spec
        int alpha = 0;
        int beta = 0;
        for (int i = 1; i <= spec.spine_length(); ++i) {
            int leaves = spec.leaf_counts[static_cast<size_t>(i - 1)];
            (i % 2 == 1 ? alpha : beta) += 1;
            (i % 2 == 1 ? beta : alpha) += leaves;
        }
        INFO(describe_spec(spec));
        REQUIRE(direct_bijection(h.graph, l));
        CHECK(oracle::block_start(h.graph, l) == beta);
        CHECK(direct_constant(h.graph, l) == 2 * alpha + 4 * beta);

        auto s = caterpillar_super_labeling(spec);
        REQUIRE(direct_bijection(h.graph, s));
        CHECK(oracle::block_start(h.graph, s) == alpha + beta);
        CHECK(direct_constant(h.graph, s) == 2 * alpha + 3 * beta + 1);

        check_transforms(h.graph, &*h.bipartition, l);
        check_transforms(h.graph, &*h.bipartition, s);

        auto phi = to_graceful(h.graph, *h.bipartition, l);
        CHECK(is_graceful(h.graph, phi));
        auto sup = to_super_edge_magic(h.graph, *h.bipartition, l);
        CHECK(direct_bijection(h.graph, sup));
        CHECK(oracle::block_start(h.graph, sup) == h.graph.vertex_count());
        CHECK(direct_constant(h.graph, sup) > 0);
    }
}

TEST_CASE("caterpillar super labeling examples")
{
    auto p4 = build_caterpillar({ { 1, 1 } });
    CHECK(direct_constant(p4.graph, caterpillar_super_labeling({ { 1, 1 } })) == 11);
    auto star = build_caterpillar({ { 3 } });
    CHECK(direct_constant(star.graph, caterpillar_super_labeling({ { 3 } })) == 12);
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            auto ds = build_double_star(m, n);
            auto s = caterpillar_super_labeling({ { m, n } });
            CHECK(direct_constant(ds.graph, s) == 3 * m + 2 * n + 6);
            CHECK(classify(ds.graph, s).is_super);
        }
}

TEST_CASE("double star consecutive labelings")
{
    auto ds11 = build_double_star(1, 1);
    auto v1 = double_star_consecutive(1, 1, 1);
    CHECK(v1.vertex_labels[static_cast<size_t>(ds11.at("v"))] == 2);
    CHECK(v1.vertex_labels[static_cast<size_t>(ds11.at("u"))] == 6);
    CHECK(direct_constant(ds11.graph, v1) == 12);

    auto ds22 = build_double_star(2, 2);
    auto v2 = double_star_consecutive(2, 2, 2);
    CHECK(v2.vertex_labels[static_cast<size_t>(ds22.at("v"))] == 1);
    CHECK(v2.vertex_labels[static_cast<size_t>(ds22.at("u"))] == 11);
    CHECK(direct_constant(ds22.graph, v2) == 18);

    auto ds12 = build_double_star(1, 2);
    auto w = double_star_consecutive(1, 2, 1);
    CHECK(w.vertex_labels[static_cast<size_t>(ds12.at("v"))] == 2);
    CHECK(w.vertex_labels[static_cast<size_t>(ds12.at("u"))] == 7);
    CHECK(direct_constant(ds12.graph, w) == 14);

    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            auto ds = build_double_star(m, n);
            for (int variant : { 1, 2 }) {
                auto l = double_star_consecutive(m, n, variant);
                REQUIRE(direct_bijection(ds.graph, l));
                CHECK(direct_constant(ds.graph, l) == 4 * m + 2 * n + 6);
                CHECK(oracle::block_start(ds.graph, l) == m + 1);
                check_transforms(ds.graph, &*ds.bipartition, l);
            }
            CHECK(double_star_consecutive(m, n, 1) != double_star_consecutive(m, n, 2));
        }
    CHECK_THROWS_AS(double_star_consecutive(1, 1, 3), Error);
}

TEST_CASE("dual examples")
{
    auto p4 = build_caterpillar({ { 1, 1 } });
    auto l = caterpillar_beta_labeling({ { 1, 1 } });
    auto d = dual(p4.graph, l);
    CHECK(direct_constant(p4.graph, d) == 3 * 8 - 12);
    CHECK(oracle::block_start(p4.graph, d) == 2);
    CHECK(dual(p4.graph, d) == l);

    Graph p3 = build_path(3).graph;
    for (const auto& zero : oracle::all_consecutive(p3, 0))
        CHECK(classify(p3, dual(p3, zero)).is_super);

    TotalLabeling non_magic { { 7, 1, 2, 6 }, { 5, 4, 3 } };
    CHECK_THROWS_AS(dual(p4.graph, non_magic), Error);
}

TEST_CASE("lambda star examples")
{
    auto ds11 = build_double_star(1, 1);
    auto l = double_star_consecutive(1, 1, 1);
    auto which = lambda_star_case(ds11.graph, &*ds11.bipartition, l);
    CHECK((which == LambdaStarCase::BX || which == LambdaStarCase::BY));
    auto r = lambda_star(ds11.graph, &*ds11.bipartition, l);
    CHECK(direct_constant(ds11.graph, r) == 5 * 2 + 2 + 3 * 3 + 3 - 12);
    CHECK(lambda_star_constant(ds11.graph, &*ds11.bipartition, which, 12) == 12);

    Graph p3 = build_path(3).graph;
    auto supers = oracle::all_consecutive(p3, 3);
    REQUIRE_FALSE(supers.empty());
    for (const auto& s : supers) {
        auto z = dual(p3, s);
        int k = direct_constant(p3, z);
        CHECK(lambda_star_case(p3, nullptr, z) == LambdaStarCase::BZero);
        CHECK(direct_constant(p3, lambda_star(p3, nullptr, z)) == 2 * 3 + 5 * 2 + 3 - k);
        CHECK(lambda_star_case(p3, nullptr, s) == LambdaStarCase::BFull);
    }

    TotalLabeling non_magic { { 7, 1, 2, 6 }, { 5, 4, 3 } };
    CHECK_THROWS_AS(lambda_star(ds11.graph, &*ds11.bipartition, non_magic), Error);
    CHECK_THROWS_AS(lambda_star(ds11.graph, nullptr, l), Error);
}

TEST_CASE("transforms on every consecutive labeling of small graphs")
{
    std::vector<FamilyHandle> graphs { build_path(3), build_path(4), build_star(3), build_path(5), build_cycle(3),
        build_double_star(1, 2) };
    for (const auto& h : graphs) {
        const Bipartition* bip = h.bipartition ? &*h.bipartition : nullptr;
        int count = 0;
        for (const auto& l : oracle::all_edge_magic(h.graph)) {
            if (oracle::block_start(h.graph, l) < 0)
                continue;
            check_transforms(h.graph, bip, l);
            ++count;
        }
        CHECK(count > 0);
    }
}

TEST_CASE("graceful conversion")
{
    auto p4 = build_caterpillar({ { 1, 1 } });
    auto l = caterpillar_beta_labeling({ { 1, 1 } });
    auto phi = to_graceful(p4.graph, *p4.bipartition, l);
    // order c1, c1,1, c2, c2,1
    CHECK(phi.vertex_labels == std::vector<int> { 3, 0, 1, 2 });
    CHECK(is_graceful(p4.graph, phi));

    for (int p = 1; p <= 5; ++p) {
        auto star = build_caterpillar({ { p } });
        auto g = to_graceful(star.graph, *star.bipartition, caterpillar_beta_labeling({ { p } }));
        CHECK(is_graceful(star.graph, g));
    }

    TotalLabeling corrupted { { 7, 1, 2, 6 }, { 5, 4, 3 } };
    CHECK_THROWS_AS(to_graceful(p4.graph, *p4.bipartition, corrupted), Error);
}

TEST_CASE("super conversion")
{
    auto p4 = build_caterpillar({ { 1, 1 } });
    auto s = to_super_edge_magic(p4.graph, *p4.bipartition, caterpillar_beta_labeling({ { 1, 1 } }));
    CHECK(classify(p4.graph, s).is_super);

    auto ds12 = build_double_star(1, 2);
    auto t = to_super_edge_magic(ds12.graph, *ds12.bipartition, double_star_consecutive(1, 2, 1));
    CHECK(classify(ds12.graph, t).is_super);

    auto zero = dual(p4.graph, caterpillar_super_labeling({ { 1, 1 } }));
    REQUIRE(oracle::block_start(p4.graph, zero) == 0);
    CHECK_THROWS_AS(to_super_edge_magic(p4.graph, *p4.bipartition, zero), Error);
    CHECK_THROWS_AS(to_graceful(p4.graph, *p4.bipartition, zero), Error);
}

TEST_CASE("double star constant chain")
{
    for (auto [m, n] : std::vector<std::pair<int, int>> { { 1, 1 }, { 1, 2 }, { 2, 2 } }) {
        auto ds = build_double_star(m, n);
        const Graph& g = ds.graph;
        const Bipartition& bip = *ds.bipartition;
        const int v = m + n + 2;

        auto base = caterpillar_beta_labeling({ { m, n } });
        CHECK(direct_constant(g, base) == 4 * m + 2 * n + 6);
        CHECK(oracle::block_start(g, base) == m + 1);

        auto super_a = to_super_edge_magic(g, bip, base);
        CHECK(direct_constant(g, super_a) == 3 * m + 2 * n + 6);
        CHECK(oracle::block_start(g, super_a) == v);

        auto flipped = dual(g, base);
        CHECK(direct_constant(g, flipped) == 2 * m + 4 * n + 6);
        CHECK(oracle::block_start(g, flipped) == n + 1);

        auto super_b = to_super_edge_magic(g, bip, flipped);
        CHECK(direct_constant(g, super_b) == 2 * m + 3 * n + 6);
        CHECK(oracle::block_start(g, super_b) == v);

        auto zero_a = dual(g, super_a);
        CHECK(direct_constant(g, zero_a) == 3 * m + 4 * n + 6);
        CHECK(oracle::block_start(g, zero_a) == 0);

        auto zero_b = dual(g, super_b);
        CHECK(direct_constant(g, zero_b) == 4 * m + 3 * n + 6);
        CHECK(oracle::block_start(g, zero_b) == 0);
    }
}
