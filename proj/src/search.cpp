#include "magilab/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <cstdint>
#include <cstdlib>
#include <queue>
#include <string>
#include <thread>

namespace magilab {

int default_label_budget()
{
    if (const char* env = std::getenv("MAGILAB_BUDGET")) {
        char* end = nullptr;
        long value = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || value < 1)
            throw Error(std::string("MAGILAB_BUDGET must be a positive integer, got '") + env + "'");
        return static_cast<int>(std::min<long>(value, kMaxLabelBudget));
    }
    return kDefaultLabelBudget;
}

namespace {

    using Mask = std::uint64_t;

    constexpr Mask bit(int label) { return Mask { 1 } << label; }

    Mask range_mask(int lo, int hi)
    {
        Mask m = 0;
        for (int l = lo; l <= hi; ++l)
            m |= bit(l);
        return m;
    }

    struct Step {
        Vertex vertex = 0;
        std::vector<std::pair<Vertex, int>> earlier; // assigned neighbour, edge index
        Vertex twin_before = -1;
        std::vector<int> weights_after; // nonzero weights still to place, descending
    };

    /// Everything about a search that does not depend on k.
    struct Plan {
        const Graph* g = nullptr;
        int labels = 0;
        Mask vertex_pool = 0;
        int edge_lo = 0;
        int edge_hi = 0;
        int block_b = 0; // > 0 turns on the neighbour-block rule
        std::vector<int> weight;
        long long target_offset = 0; // sum of weight*label must equal k*|E| - offset
        std::vector<int> initial_weights;
        std::vector<Step> steps;
    };

    /// Internal vertices first (BFS from a maximum-degree vertex), then
    /// leaves. Every leaf then sees its only neighbour already labelled.
    std::vector<Vertex> search_order(const Graph& g)
    {
        const int n = g.vertex_count();
        std::vector<Vertex> order;
        std::vector<char> placed(static_cast<size_t>(n), 0);
        Vertex start = 0;
        for (Vertex v = 0; v < n; ++v)
            if (g.degree(v) > g.degree(start))
                start = v;
        auto bfs = [&](bool internal_only) {
            std::queue<Vertex> queue;
            if (! placed[static_cast<size_t>(start)]) {
                placed[static_cast<size_t>(start)] = 1;
                order.push_back(start);
            }
            for (Vertex v : order)
                queue.push(v);
            while (! queue.empty()) {
                Vertex u = queue.front();
                queue.pop();
                for (Vertex w : g.neighbors(u)) {
                    if (placed[static_cast<size_t>(w)] || (internal_only && g.degree(w) < 2))
                        continue;
                    placed[static_cast<size_t>(w)] = 1;
                    order.push_back(w);
                    queue.push(w);
                }
            }
        };
        bfs(true);
        bfs(false);
        for (Vertex v = 0; v < n; ++v)
            if (! placed[static_cast<size_t>(v)])
                order.push_back(v);
        return order;
    }

    /// Pairs of vertices whose transposition is an automorphism.
    std::vector<Vertex> twin_predecessors(const Graph& g, const std::vector<Vertex>& order)
    {
        const int n = g.vertex_count();
        std::vector<Vertex> before(static_cast<size_t>(n), -1);
        std::vector<std::vector<Vertex>> classes;
        auto twins = [&](Vertex a, Vertex b) {
            std::vector<Vertex> na(g.neighbors(a).begin(), g.neighbors(a).end());
            std::vector<Vertex> nb(g.neighbors(b).begin(), g.neighbors(b).end());
            std::erase(na, b);
            std::erase(nb, a);
            return na == nb;
        };
        for (Vertex v : order) {
            bool matched = false;
            for (size_t c = 0; c < classes.size() && ! matched; ++c)
                if (twins(classes[c].front(), v)) {
                    before[static_cast<size_t>(v)] = classes[c].back();
                    classes[c].push_back(v);
                    matched = true;
                }
            if (! matched)
                classes.push_back({ v });
        }
        return before;
    }

    Plan make_plan(const Graph& g, bool canonical_only)
    {
        Plan plan;
        plan.g = &g;
        plan.labels = g.vertex_count() + g.edge_count();
        plan.weight.resize(static_cast<size_t>(g.vertex_count()));
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            plan.weight[static_cast<size_t>(v)] = g.degree(v) - 1;

        const auto order = search_order(g);
        std::vector<int> position(static_cast<size_t>(g.vertex_count()));
        for (size_t i = 0; i < order.size(); ++i)
            position[static_cast<size_t>(order[i])] = static_cast<int>(i);
        const auto twin_before = canonical_only ? twin_predecessors(g, order)
                                                : std::vector<Vertex>(order.size(), -1);

        auto weights_from = [&](size_t first) {
            std::vector<int> w;
            for (size_t i = first; i < order.size(); ++i)
                if (int x = plan.weight[static_cast<size_t>(order[i])]; x != 0)
                    w.push_back(x);
            std::sort(w.rbegin(), w.rend());
            return w;
        };
        plan.initial_weights = weights_from(0);
        for (size_t i = 0; i < order.size(); ++i) {
            Step step;
            step.vertex = order[i];
            for (Vertex w : g.neighbors(order[i]))
                if (position[static_cast<size_t>(w)] < static_cast<int>(i))
                    step.earlier.emplace_back(w, g.edge_index(order[i], w));
            step.twin_before = twin_before[static_cast<size_t>(order[i])];
            step.weights_after = weights_from(i + 1);
            plan.steps.push_back(std::move(step));
        }
        return plan;
    }

    struct KResult {
        std::vector<TotalLabeling> labelings;
        bool searched = false;
    };

    class Solver {
    public:
        Solver(const Plan& plan, int k, std::size_t cap)
            : plan_(plan)
            , g_(*plan.g)
            , k_(k)
            , cap_(cap)
            , target_(static_cast<long long>(k) * g_.edge_count() - plan.target_offset)
            , labels_(static_cast<size_t>(g_.vertex_count()), 0)
            , low_(labels_.size(), 0)
            , high_(labels_.size(), 0)
        {
        }

        std::vector<TotalLabeling> run()
        {
            if (fits(plan_.initial_weights, 0))
                descend(0, 0);
            return std::move(found_);
        }

    private:
        // Whether the still-unplaced weighted sum can reach the target.
        bool fits(const std::vector<int>& weights, long long partial) const
        {
            const long long rest = target_ - partial;
            if (weights.empty())
                return rest == 0;
            Mask avail = plan_.vertex_pool & ~used_;
            int count = std::popcount(avail);
            if (count < static_cast<int>(weights.size()))
                return false;
            int ascending[64];
            int i = 0;
            for (Mask m = avail; m; m &= m - 1)
                ascending[i++] = std::countr_zero(m);
            long long lo = 0;
            long long hi = 0;
            for (size_t w = 0; w < weights.size(); ++w) {
                lo += static_cast<long long>(weights[w]) * ascending[w];
                hi += static_cast<long long>(weights[w]) * ascending[count - 1 - static_cast<int>(w)];
            }
            return lo <= rest && rest <= hi;
        }

        bool block_conflict(Vertex v, bool low)
        {
            bool conflict = false;
            for (Vertex w : g_.neighbors(v)) {
                auto& mine = low ? low_[static_cast<size_t>(w)] : high_[static_cast<size_t>(w)];
                auto& other = low ? high_[static_cast<size_t>(w)] : low_[static_cast<size_t>(w)];
                ++mine;
                conflict = conflict || other > 0;
            }
            return conflict;
        }

        void block_release(Vertex v, bool low)
        {
            for (Vertex w : g_.neighbors(v))
                --(low ? low_[static_cast<size_t>(w)] : high_[static_cast<size_t>(w)]);
        }

        // Returns false once the cap is reached.
        bool descend(size_t pos, long long partial)
        {
            if (pos == plan_.steps.size()) {
                record();
                return found_.size() < cap_;
            }
            const Step& step = plan_.steps[pos];
            const Vertex v = step.vertex;
            const int weight = plan_.weight[static_cast<size_t>(v)];
            int floor_label = 0;
            if (step.twin_before >= 0)
                floor_label = labels_[static_cast<size_t>(step.twin_before)];

            for (Mask m = plan_.vertex_pool & ~used_; m; m &= m - 1) {
                const int label = std::countr_zero(m);
                if (label <= floor_label)
                    continue;
                used_ |= bit(label);
                Mask edges_taken = 0;
                bool ok = true;
                for (auto [u, e] : step.earlier) {
                    const int edge_label = k_ - label - labels_[static_cast<size_t>(u)];
                    if (edge_label < plan_.edge_lo || edge_label > plan_.edge_hi || (used_ & bit(edge_label))) {
                        ok = false;
                        break;
                    }
                    used_ |= bit(edge_label);
                    edges_taken |= bit(edge_label);
                }
                const bool low = label <= plan_.block_b;
                bool block_applied = false;
                if (ok && plan_.block_b > 0) {
                    block_applied = true;
                    ok = ! block_conflict(v, low);
                }
                if (ok) {
                    const long long next = partial + static_cast<long long>(weight) * label;
                    labels_[static_cast<size_t>(v)] = label;
                    if (fits(step.weights_after, next) && ! descend(pos + 1, next))
                        return false;
                    labels_[static_cast<size_t>(v)] = 0;
                }
                if (block_applied)
                    block_release(v, low);
                used_ &= ~(bit(label) | edges_taken);
            }
            return true;
        }

        void record()
        {
            TotalLabeling labeling;
            labeling.vertex_labels = labels_;
            labeling.edge_labels.resize(static_cast<size_t>(g_.edge_count()));
            const auto edges = g_.edges();
            for (size_t e = 0; e < edges.size(); ++e)
                labeling.edge_labels[e] = k_ - labels_[static_cast<size_t>(edges[e].first)]
                    - labels_[static_cast<size_t>(edges[e].second)];
            found_.push_back(std::move(labeling));
        }

        const Plan& plan_;
        const Graph& g_;
        int k_;
        std::size_t cap_;
        long long target_;
        std::vector<int> labels_;
        std::vector<int> low_;
        std::vector<int> high_;
        Mask used_ = 0;
        std::vector<TotalLabeling> found_;
    };

    void check_searchable(const Graph& g, int budget)
    {
        if (! is_connected(g))
            throw Error("search requires a connected graph");
        if (g.edge_count() < 1)
            throw Error("search requires at least one edge");
        const int labels = g.vertex_count() + g.edge_count();
        const int limit = std::min(budget, kMaxLabelBudget);
        if (labels > limit)
            throw BudgetExceeded("search budget exceeded: |V|+|E| = " + std::to_string(labels) + " > "
                + std::to_string(limit) + " labels (raise MAGILAB_BUDGET to allow it)");
    }

    SearchReport run(const SearchQuery& query, const Plan& plan, int k_lo, int k_hi)
    {
        std::vector<int> ks;
        for (int k = k_lo; k <= k_hi; ++k)
            if (! query.magic_constant || *query.magic_constant == k)
                ks.push_back(k);

        const std::size_t cap = query.limit.value_or(SIZE_MAX);
        std::vector<KResult> results(ks.size());
        std::atomic<std::size_t> next { 0 };
        // smallest k index that alone filled the cap; larger k are irrelevant
        std::atomic<std::size_t> cutoff { SIZE_MAX };
        auto work = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < ks.size();) {
                if (i > cutoff.load())
                    continue;
                results[i].labelings = Solver(plan, ks[i], cap).run();
                results[i].searched = true;
                if (results[i].labelings.size() >= cap) {
                    std::size_t seen = cutoff.load();
                    while (i < seen && ! cutoff.compare_exchange_weak(seen, i)) { }
                }
            }
        };
        unsigned workers = query.workers ? query.workers : std::max(1u, std::thread::hardware_concurrency());
        workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(ks.size(), 1)));
        if (workers <= 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back(work);
            for (auto& t : pool)
                t.join();
        }

        SearchReport report;
        report.b = query.b;
        for (auto& r : results) {
            for (auto& labeling : r.labelings) {
                if (report.labelings.size() >= cap)
                    break;
                report.labelings.push_back(std::move(labeling));
            }
            if (report.labelings.size() >= cap)
                break;
        }
        report.exhausted = report.labelings.size() < cap;
        std::sort(report.labelings.begin(), report.labelings.end());
        for (const auto& labeling : report.labelings)
            report.constants_found.insert(*magic_constant_of(query.graph, labeling));
        return report;
    }

} // namespace

SearchReport find_consecutive(const SearchQuery& query)
{
    const Graph& g = query.graph;
    check_searchable(g, query.budget);
    if (! query.b)
        throw Error("find_consecutive needs a target b");
    const int b = *query.b;
    const int v = g.vertex_count();
    const int e = g.edge_count();
    if (b < 0 || b > v)
        throw Error("b must lie in 0..|V|");

    Plan plan = make_plan(g, query.canonical_only);
    plan.vertex_pool = range_mask(1, b) | range_mask(b + e + 1, v + e);
    plan.edge_lo = b + 1;
    plan.edge_hi = b + e;
    plan.block_b = query.use_theorem_pruning ? b : 0;
    // k|E| = sum deg*label + sum of edge labels, and the pool is used in full
    long long pool_sum = 0;
    for (int l = 1; l <= v + e; ++l)
        if (plan.vertex_pool & bit(l))
            pool_sum += l;
    plan.target_offset = static_cast<long long>(e) * b + static_cast<long long>(e) * (e + 1) / 2 + pool_sum;

    std::vector<int> pool;
    for (int l = 1; l <= v + e; ++l)
        if (plan.vertex_pool & bit(l))
            pool.push_back(l);
    const int k_lo = pool[0] + pool[1] + plan.edge_lo;
    const int k_hi = pool[pool.size() - 1] + pool[pool.size() - 2] + plan.edge_hi;
    return run(query, plan, k_lo, k_hi);
}

SearchReport find_edge_magic(const SearchQuery& query)
{
    const Graph& g = query.graph;
    check_searchable(g, query.budget);
    const int total = g.vertex_count() + g.edge_count();
    Plan plan = make_plan(g, query.canonical_only);
    plan.vertex_pool = range_mask(1, total);
    plan.edge_lo = 1;
    plan.edge_hi = total;
    // k|E| = (sum of all labels) + sum (deg-1)*label
    plan.target_offset = static_cast<long long>(total) * (total + 1) / 2;
    SearchQuery any = query;
    any.b.reset();
    return run(any, plan, 6, 3 * total - 3);
}

std::map<int, TotalLabeling> feasible_b_witnesses(const Graph& g, int budget)
{
    check_searchable(g, budget);
    std::map<int, TotalLabeling> witnesses;
    for (int b = 0; b <= g.vertex_count(); ++b) {
        SearchQuery query { .graph = g, .b = b, .limit = 1, .canonical_only = true, .budget = budget };
        auto report = find_consecutive(query);
        if (! report.labelings.empty())
            witnesses.emplace(b, std::move(report.labelings.front()));
    }
    return witnesses;
}

std::set<int> feasible_b_set(const Graph& g, int budget)
{
    std::set<int> result;
    for (const auto& [b, labeling] : feasible_b_witnesses(g, budget))
        result.insert(b);
    return result;
}

std::vector<VertexLabeling> find_graceful(const Graph& g, std::optional<std::size_t> limit)
{
    if (g.edge_count() + 1 > kMaxLabelBudget)
        throw BudgetExceeded("graceful search limited to " + std::to_string(kMaxLabelBudget - 1) + " edges");
    const int m = g.edge_count();
    const auto order = search_order(g);
    std::vector<int> position(static_cast<size_t>(g.vertex_count()));
    for (size_t i = 0; i < order.size(); ++i)
        position[static_cast<size_t>(order[i])] = static_cast<int>(i);

    std::vector<VertexLabeling> found;
    std::vector<int> labels(static_cast<size_t>(g.vertex_count()), -1);
    Mask used = 0;
    Mask differences = 0;
    const std::size_t cap = limit.value_or(SIZE_MAX);

    auto descend = [&](auto&& self, size_t pos) -> bool {
        if (pos == order.size()) {
            found.push_back({ labels });
            return found.size() < cap;
        }
        const Vertex v = order[pos];
        for (int label = 0; label <= m; ++label) {
            if (used & bit(label))
                continue;
            Mask taken = 0;
            bool ok = true;
            for (Vertex w : g.neighbors(v)) {
                if (position[static_cast<size_t>(w)] >= static_cast<int>(pos))
                    continue;
                const int d = std::abs(label - labels[static_cast<size_t>(w)]);
                if ((differences | taken) & bit(d)) {
                    ok = false;
                    break;
                }
                taken |= bit(d);
            }
            if (! ok)
                continue;
            used |= bit(label);
            differences |= taken;
            labels[static_cast<size_t>(v)] = label;
            if (! self(self, pos + 1))
                return false;
            labels[static_cast<size_t>(v)] = -1;
            used &= ~bit(label);
            differences &= ~taken;
        }
        return true;
    };
    // difference 0 is never allowed
    differences = bit(0);
    descend(descend, 0);
    return found;
}

AutomorphismGroup automorphisms(const Graph& g, std::size_t max_order)
{
    const int n = g.vertex_count();
    if (n > kMaxAutomorphismVertices)
        throw BudgetExceeded("automorphism search limited to " + std::to_string(kMaxAutomorphismVertices) + " vertices");

    // colour refinement starting from degrees
    std::vector<int> colour(static_cast<size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        colour[static_cast<size_t>(v)] = g.degree(v);
    for (;;) {
        std::map<std::pair<int, std::vector<int>>, int> ids;
        std::vector<std::pair<int, std::vector<int>>> signature(static_cast<size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            std::vector<int> around;
            for (Vertex w : g.neighbors(v))
                around.push_back(colour[static_cast<size_t>(w)]);
            std::sort(around.begin(), around.end());
            signature[static_cast<size_t>(v)] = { colour[static_cast<size_t>(v)], std::move(around) };
            ids.emplace(signature[static_cast<size_t>(v)], 0);
        }
        int next_id = 0;
        for (auto& [key, id] : ids)
            id = next_id++;
        std::vector<int> refined(static_cast<size_t>(n));
        for (Vertex v = 0; v < n; ++v)
            refined[static_cast<size_t>(v)] = ids[signature[static_cast<size_t>(v)]];
        const auto classes = [](const std::vector<int>& c) { return std::set<int>(c.begin(), c.end()).size(); };
        const bool stable = classes(refined) == classes(colour);
        colour = std::move(refined);
        if (stable)
            break;
    }

    AutomorphismGroup group;
    std::vector<Vertex> image(static_cast<size_t>(n), -1);
    std::vector<char> taken(static_cast<size_t>(n), 0);
    auto extend = [&](auto&& self, Vertex v) -> void {
        if (v == n) {
            if (group.permutations.size() >= max_order)
                throw BudgetExceeded("automorphism group larger than " + std::to_string(max_order));
            group.permutations.push_back(image);
            return;
        }
        for (Vertex w = 0; w < n; ++w) {
            if (taken[static_cast<size_t>(w)] || colour[static_cast<size_t>(w)] != colour[static_cast<size_t>(v)])
                continue;
            bool ok = true;
            for (Vertex u = 0; u < v && ok; ++u)
                ok = g.adjacent(u, v) == g.adjacent(image[static_cast<size_t>(u)], w);
            if (! ok)
                continue;
            image[static_cast<size_t>(v)] = w;
            taken[static_cast<size_t>(w)] = 1;
            self(self, v + 1);
            taken[static_cast<size_t>(w)] = 0;
        }
        image[static_cast<size_t>(v)] = -1;
    };
    extend(extend, 0);
    return group;
}

TotalLabeling apply_automorphism(const Graph& g, const std::vector<Vertex>& perm, const TotalLabeling& labeling)
{
    TotalLabeling moved;
    moved.vertex_labels.resize(labeling.vertex_labels.size());
    moved.edge_labels.resize(labeling.edge_labels.size());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        moved.vertex_labels[static_cast<size_t>(perm[static_cast<size_t>(v)])] = labeling.vertex_labels[static_cast<size_t>(v)];
    const auto edges = g.edges();
    for (size_t e = 0; e < edges.size(); ++e) {
        int target = g.edge_index(perm[static_cast<size_t>(edges[e].first)], perm[static_cast<size_t>(edges[e].second)]);
        moved.edge_labels[static_cast<size_t>(target)] = labeling.edge_labels[e];
    }
    return moved;
}

OrbitCount count_canonical(const Graph& g, int b, const AutomorphismGroup& group, int budget)
{
    SearchQuery query { .graph = g, .b = b, .budget = budget };
    const auto report = find_consecutive(query);
    std::set<TotalLabeling> representatives;
    for (const auto& labeling : report.labelings) {
        TotalLabeling best = labeling;
        for (const auto& perm : group.permutations)
            best = std::min(best, apply_automorphism(g, perm, labeling));
        representatives.insert(std::move(best));
    }
    OrbitCount count;
    count.orbits = representatives.size();
    count.raw = report.labelings.size();
    count.constants = report.constants_found;
    return count;
}

} // namespace magilab
