#pragma once

#include "magilab/graph.hpp"
#include "magilab/io.hpp"
#include "magilab/search.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace magilab {

enum class Verdict { Pass, Fail, OutOfBudget };

std::string to_string(Verdict verdict);

/// Outcome of checking one predicted statement against the search oracle.
struct TheoremReport {
    std::string theorem_id;
    std::string graph_description;
    std::string predicted;
    std::string observed;
    Verdict verdict = Verdict::Fail;
    std::string note;
};

/// k = d*t + 6 with d = gcd(m, n), when such t >= 0 exists.
struct ConstantFormWitness {
    int m = 0;
    int n = 0;
    int d = 0;
    int k = 0;
    std::optional<int> t;
};

std::string format_set(const std::set<int>& values);

/// {0, |X|, |Y|, |V|} for bipartite graphs, {0, |V|} otherwise.
/// `bipartition` is computed when null.
std::set<int> predicted_b_candidates(const Graph& g, const Bipartition* bipartition = nullptr);

/// {0, β, α, α+β} for the caterpillar.
std::set<int> caterpillar_b_set(const CaterpillarSpec& spec);

/// {0, 2p+1} for p >= 3. L_1 and L_2 are the paths P_3 and P_5, which are
/// caterpillars with all four values available.
std::set<int> lobster_b_set(int p);

ConstantFormWitness constant_form_check(int m, int n, int k);

enum class Trichotomy { NoLabeling, ZeroAndSuperOnly, TreeAllFour };

std::string to_string(Trichotomy which);

/// Which of the three mutually exclusive cases the observed feasible set
/// falls into. Fails when none matches; out-of-budget when not exhausted.
TheoremReport classify_trichotomy(const Graph& g, const Bipartition& bipartition, const std::set<int>& feasible,
    bool exhausted = true, const std::string& description = "");

/// Every spec with 2..max_vertices vertices, one per reversal pair.
std::vector<CaterpillarSpec> caterpillar_specs_up_to(int max_vertices);

std::string describe(const CaterpillarSpec& spec);

/// Feasible sets of small cycles, stars and complete bipartite graphs.
std::vector<TheoremReport> closing_claims_suite(int budget = default_label_budget());
/// Feasible b sets of caterpillars with |V|+|E| <= max_labels.
std::vector<TheoremReport> caterpillar_suite(int max_labels, int budget = default_label_budget());
/// L_1..L_max_p feasible sets plus graceful existence for L_4.
std::vector<TheoremReport> lobster_suite(int max_p = 4, int budget = default_label_budget());
/// Orbit counts and constants of the (m+1)- and (n+1)-edge consecutive
/// labelings, and the d*t+6 form of every magic constant.
std::vector<TheoremReport> double_star_suite(
    const std::vector<std::pair<int, int>>& sizes, int budget = default_label_budget());

Json to_json(const TheoremReport& report);
Json to_json(const std::vector<TheoremReport>& reports);
std::string format_table(const std::vector<TheoremReport>& reports);
bool all_pass(const std::vector<TheoremReport>& reports);

} // namespace magilab
