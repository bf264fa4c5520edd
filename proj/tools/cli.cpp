#include "cli.hpp"

#include "magilab/analysis.hpp"
#include "magilab/constructions.hpp"
#include "magilab/io.hpp"
#include "magilab/search.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace magilab::cli {

namespace {

    struct UsageError : Error {
        using Error::Error;
    };

    Json read_json(const std::string& path, std::istream& in)
    {
        std::string text;
        if (path == "-") {
            text.assign(std::istreambuf_iterator<char>(in), {});
        } else {
            std::ifstream file(path);
            if (! file)
                throw Error("cannot open '" + path + "'");
            text.assign(std::istreambuf_iterator<char>(file), {});
        }
        try {
            return Json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw Error("invalid JSON in '" + path + "': " + e.what());
        }
    }

    CaterpillarSpec spine_arg(const std::string& text)
    {
        try {
            return parse_spine(text);
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
    }

    void emit(std::ostream& out, const std::string& format, const Json& doc, const Graph* g = nullptr,
        const TotalLabeling* labeling = nullptr, const FamilyHandle* names = nullptr)
    {
        if (format == "dot") {
            if (! g)
                throw UsageError("dot output is only available for graphs and labelings");
            out << to_dot(*g, labeling, names);
        } else {
            out << doc.dump(2) << "\n";
        }
    }

    struct Options {
        std::string format = "json";
        // gen / construct
        std::string spine;
        int p = 0;
        int length = 0;
        int count = 0;
        std::vector<int> pair;
        int variant = 1;
        // transform / verify / search / analyze
        std::string op;
        std::vector<std::string> inputs;
        std::string graph_path = "-";
        std::string b;
        std::optional<int> constant;
        std::optional<std::size_t> limit;
        bool no_prune = false;
        bool canonical = false;
        std::vector<int> mnk;
        // suite
        std::string suite;
        int max_labels = 15;
        int max_p = 4;
    };

    void add_format(CLI::App* cmd, Options& o, bool dot)
    {
        cmd->add_option("--format", o.format, "output format")
            ->check(dot ? CLI::IsMember({ "json", "dot" }) : CLI::IsMember({ "json", "table" }));
    }

    LabeledGraph read_bundle(const std::vector<std::string>& inputs, std::istream& in)
    {
        if (inputs.size() == 2) {
            auto handle = handle_from_json(read_json(inputs[0], in));
            auto doc = read_json(inputs[1], in);
            return { std::move(handle), doc.contains("labeling") ? labeling_from_json(doc["labeling"]) : labeling_from_json(doc) };
        }
        return bundle_from_json(read_json(inputs.empty() ? "-" : inputs[0], in));
    }

    const Bipartition& require_bipartition(const FamilyHandle& handle)
    {
        if (! handle.bipartition)
            throw Error("this transform needs a connected bipartite graph");
        return *handle.bipartition;
    }

    int do_gen(CLI::App* gen, const Options& o, std::ostream& out)
    {
        FamilyHandle handle;
        if (gen->got_subcommand("caterpillar"))
            handle = build_caterpillar(spine_arg(o.spine));
        else if (gen->got_subcommand("lobster"))
            handle = build_lobster(o.p);
        else if (gen->got_subcommand("cycle"))
            handle = build_cycle(o.length);
        else if (gen->got_subcommand("kmn"))
            handle = build_complete_bipartite(o.pair[0], o.pair[1]);
        else if (gen->got_subcommand("double-star"))
            handle = build_double_star(o.pair[0], o.pair[1]);
        else if (gen->got_subcommand("path"))
            handle = build_path(o.count);
        else if (gen->got_subcommand("star"))
            handle = build_star(o.p);
        emit(out, o.format, to_json(handle), &handle.graph, nullptr, &handle);
        return kExitOk;
    }

    int do_construct(CLI::App* construct, const Options& o, std::ostream& out)
    {
        LabeledGraph bundle;
        if (construct->got_subcommand("caterpillar-beta")) {
            auto spec = spine_arg(o.spine);
            bundle = { build_caterpillar(spec), caterpillar_beta_labeling(spec) };
        } else if (construct->got_subcommand("caterpillar-super")) {
            auto spec = spine_arg(o.spine);
            bundle = { build_caterpillar(spec), caterpillar_super_labeling(spec) };
        } else {
            bundle = { build_double_star(o.pair[0], o.pair[1]), double_star_consecutive(o.pair[0], o.pair[1], o.variant) };
        }
        emit(out, o.format, to_json(bundle), &bundle.handle.graph, &bundle.labeling, &bundle.handle);
        return kExitOk;
    }

    int do_transform(const Options& o, std::istream& in, std::ostream& out)
    {
        auto bundle = read_bundle(o.inputs, in);
        const Graph& g = bundle.handle.graph;
        const Bipartition* bipartition = bundle.handle.bipartition ? &*bundle.handle.bipartition : nullptr;
        if (o.op == "graceful") {
            auto graceful = to_graceful(g, require_bipartition(bundle.handle), bundle.labeling);
            out << Json { { "graph", to_json(bundle.handle) }, { "labeling", to_json(graceful) } }.dump(2) << "\n";
            return kExitOk;
        }
        TotalLabeling result;
        if (o.op == "dual")
            result = dual(g, bundle.labeling);
        else if (o.op == "lambda-star")
            result = lambda_star(g, bipartition, bundle.labeling);
        else
            result = to_super_edge_magic(g, require_bipartition(bundle.handle), bundle.labeling);
        LabeledGraph transformed { bundle.handle, result };
        emit(out, o.format, to_json(transformed), &g, &transformed.labeling, &transformed.handle);
        return kExitOk;
    }

    int do_verify(const Options& o, std::istream& in, std::ostream& out)
    {
        if (o.inputs.size() > 2)
            throw UsageError("verify takes a bundle, or a graph and a labeling");
        Json doc;
        FamilyHandle handle;
        Json labeling_doc;
        if (o.inputs.size() == 2) {
            handle = handle_from_json(read_json(o.inputs[0], in));
            labeling_doc = read_json(o.inputs[1], in);
            if (labeling_doc.contains("labeling"))
                labeling_doc = labeling_doc["labeling"];
        } else {
            doc = read_json(o.inputs.empty() ? "-" : o.inputs[0], in);
            if (! doc.contains("graph") || ! doc.contains("labeling"))
                throw Error("expected a document with 'graph' and 'labeling'");
            handle = handle_from_json(doc["graph"]);
            labeling_doc = doc["labeling"];
        }
        const Graph& g = handle.graph;
        if (! labeling_doc.contains("edge_labels")) {
            VertexLabeling vl { labeling_doc.at("vertex_labels").get<std::vector<int>>() };
            bool graceful = false;
            try {
                graceful = is_graceful(g, vl);
            } catch (const Error&) {
            }
            out << Json { { "graceful", graceful } }.dump(2) << "\n";
            return graceful ? kExitOk : kExitFailed;
        }
        auto labeling = labeling_from_json(labeling_doc);
        const bool valid = is_bijection(g, labeling);
        auto classification = classify(g, labeling, handle.bipartition ? &*handle.bipartition : nullptr);
        Json report { { "valid", valid } };
        report.update(to_json(classification));
        if (classification.consecutive_index && *classification.consecutive_index >= 1)
            report["neighbor_block"] = neighbor_block_holds(g, labeling, *classification.consecutive_index);
        out << report.dump(2) << "\n";
        return valid && classification.magic_constant ? kExitOk : kExitFailed;
    }

    int do_search(const Options& o, std::istream& in, std::ostream& out)
    {
        auto handle = handle_from_json(read_json(o.graph_path, in));
        SearchQuery query { .graph = handle.graph,
            .magic_constant = o.constant,
            .limit = o.limit,
            .canonical_only = o.canonical,
            .use_theorem_pruning = ! o.no_prune };
        if (o.b.empty()) {
            out << to_json(find_edge_magic(query)).dump(2) << "\n";
            return kExitOk;
        }
        if (o.b == "all") {
            Json witnesses = Json::object();
            std::set<int> feasible;
            for (int b = 0; b <= handle.graph.vertex_count(); ++b) {
                query.b = b;
                query.limit = 1;
                query.canonical_only = true;
                auto report = find_consecutive(query);
                if (report.labelings.empty())
                    continue;
                feasible.insert(b);
                witnesses[std::to_string(b)] = to_json(report.labelings.front());
            }
            out << Json { { "feasible_b", feasible }, { "exhausted", true }, { "witnesses", witnesses } }.dump(2) << "\n";
            return kExitOk;
        }
        try {
            std::size_t used = 0;
            query.b = std::stoi(o.b, &used);
            if (used != o.b.size())
                throw std::invalid_argument(o.b);
        } catch (const std::logic_error&) {
            throw UsageError("--b expects an integer or 'all', got '" + o.b + "'");
        }
        out << to_json(find_consecutive(query)).dump(2) << "\n";
        return kExitOk;
    }

    int do_analyze(CLI::App* analyze, const Options& o, std::istream& in, std::ostream& out)
    {
        if (analyze->got_subcommand("constant-form")) {
            auto w = constant_form_check(o.mnk[0], o.mnk[1], o.mnk[2]);
            Json doc { { "m", w.m }, { "n", w.n }, { "d", w.d }, { "k", w.k }, { "t", w.t ? Json(*w.t) : Json(nullptr) } };
            out << doc.dump(2) << "\n";
            return w.t ? kExitOk : kExitFailed;
        }
        auto handle = handle_from_json(read_json(o.graph_path, in));
        const Bipartition* bipartition = handle.bipartition ? &*handle.bipartition : nullptr;
        if (analyze->got_subcommand("predict")) {
            out << Json { { "candidates", predicted_b_candidates(handle.graph, bipartition) } }.dump(2) << "\n";
            return kExitOk;
        }
        if (! bipartition)
            throw Error("trichotomy applies to connected bipartite graphs");
        auto report = classify_trichotomy(handle.graph, *bipartition, feasible_b_set(handle.graph), true);
        out << to_json(report).dump(2) << "\n";
        return report.verdict == Verdict::Pass ? kExitOk : kExitFailed;
    }

    int do_suite(const Options& o, std::ostream& out)
    {
        std::vector<TheoremReport> reports;
        if (o.suite == "closing")
            reports = closing_claims_suite();
        else if (o.suite == "caterpillar")
            reports = caterpillar_suite(o.max_labels);
        else if (o.suite == "lobster")
            reports = lobster_suite(o.max_p);
        else
            reports = double_star_suite({ { 1, 1 }, { 1, 2 }, { 2, 2 }, { 1, 3 }, { 2, 4 }, { 3, 3 } });
        if (o.format == "json")
            out << to_json(reports).dump(2) << "\n";
        else
            out << format_table(reports);
        return all_pass(reports) ? kExitOk : kExitFailed;
    }

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app { "Construct, transform, verify and search edge consecutive magic labelings", "magilab" };
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("gen", "generate a graph family")->require_subcommand(1);
    auto* gen_cat = gen->add_subcommand("caterpillar", "caterpillar from leaf counts");
    gen_cat->add_option("--spine", o.spine, "comma-separated leaf counts, e.g. 2,1,2")->required();
    auto* gen_lob = gen->add_subcommand("lobster", "star with p subdivided edges");
    gen_lob->add_option("-p", o.p)->required();
    auto* gen_cyc = gen->add_subcommand("cycle", "cycle C_l");
    gen_cyc->add_option("-l", o.length)->required();
    auto* gen_kmn = gen->add_subcommand("kmn", "complete bipartite K_{m,n}");
    gen_kmn->add_option("sizes", o.pair, "m n")->required()->expected(2);
    auto* gen_ds = gen->add_subcommand("double-star", "double star S_{m,n}");
    gen_ds->add_option("sizes", o.pair, "m n")->required()->expected(2);
    auto* gen_path = gen->add_subcommand("path", "path on n vertices");
    gen_path->add_option("-n", o.count)->required();
    auto* gen_star = gen->add_subcommand("star", "star with p leaves");
    gen_star->add_option("-p", o.p)->required();
    for (auto* cmd : gen->get_subcommands([](CLI::App*) { return true; }))
        add_format(cmd, o, true);

    auto* construct = app.add_subcommand("construct", "build an explicit labeling")->require_subcommand(1);
    auto* con_beta = construct->add_subcommand("caterpillar-beta", "beta-edge consecutive labeling of a caterpillar");
    con_beta->add_option("--spine", o.spine)->required();
    auto* con_super = construct->add_subcommand("caterpillar-super", "super edge-magic labeling of a caterpillar");
    con_super->add_option("--spine", o.spine)->required();
    auto* con_ds = construct->add_subcommand("double-star", "(m+1)-edge consecutive labeling of S_{m,n}");
    con_ds->add_option("sizes", o.pair, "m n")->required()->expected(2);
    con_ds->add_option("--variant", o.variant)->check(CLI::IsMember({ 1, 2 }));
    for (auto* cmd : construct->get_subcommands([](CLI::App*) { return true; }))
        add_format(cmd, o, true);

    auto* transform = app.add_subcommand("transform", "transform a labeling bundle");
    transform->add_option("op", o.op)->required()->check(CLI::IsMember({ "dual", "lambda-star", "graceful", "super" }));
    transform->add_option("input", o.inputs, "bundle file, or graph and labeling files ('-' for stdin)");
    add_format(transform, o, true);

    auto* verify = app.add_subcommand("verify", "classify a labeling");
    verify->add_option("input", o.inputs, "bundle file, or graph and labeling files ('-' for stdin)");

    auto* search = app.add_subcommand("search", "exhaustive labeling search");
    search->add_option("--graph", o.graph_path, "graph JSON ('-' for stdin)");
    search->add_option("--b", o.b, "consecutive index, or 'all'; omit for any edge-magic labeling");
    search->add_option("--constant", o.constant, "restrict to one magic constant");
    search->add_option("--limit", o.limit, "stop after this many labelings");
    search->add_flag("--no-prune", o.no_prune, "disable neighbour-block pruning");
    search->add_flag("--canonical", o.canonical, "one labeling per permutation of twin vertices");

    auto* analyze = app.add_subcommand("analyze", "predictions and checks")->require_subcommand(1);
    auto* an_form = analyze->add_subcommand("constant-form", "is k = gcd(m,n)*t + 6 for some t >= 0");
    an_form->add_option("values", o.mnk, "m n k")->required()->expected(3);
    auto* an_predict = analyze->add_subcommand("predict", "candidate consecutive indices");
    an_predict->add_option("--graph", o.graph_path);
    auto* an_tri = analyze->add_subcommand("trichotomy", "which of the three cases a bipartite graph is in");
    an_tri->add_option("--graph", o.graph_path);

    auto* suite = app.add_subcommand("suite", "run a verification suite");
    suite->add_option("name", o.suite)->required()->check(
        CLI::IsMember({ "closing", "caterpillar", "lobster", "double-star" }));
    suite->add_option("--max-labels", o.max_labels, "caterpillar suite: largest |V|+|E|");
    suite->add_option("--max-p", o.max_p, "lobster suite: largest p");
    o.format = "table";
    add_format(suite, o, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (! suite->parsed() && o.format == "table")
        o.format = "json";

    try {
        if (gen->parsed())
            return do_gen(gen, o, out);
        if (construct->parsed())
            return do_construct(construct, o, out);
        if (transform->parsed())
            return do_transform(o, in, out);
        if (verify->parsed())
            return do_verify(o, in, out);
        if (search->parsed())
            return do_search(o, in, out);
        if (analyze->parsed())
            return do_analyze(analyze, o, in, out);
        return do_suite(o, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        err << "budget refused: " << e.what() << "\n";
        return kExitFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailed;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed input: " << e.what() << "\n";
        return kExitFailed;
    }
}

} // namespace magilab::cli
