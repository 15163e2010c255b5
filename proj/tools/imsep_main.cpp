#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "imsep/binary_shift.hpp"
#include "imsep/flow.hpp"
#include "imsep/generators.hpp"
#include "imsep/graph.hpp"
#include "imsep/hardness.hpp"
#include "imsep/json_io.hpp"
#include "imsep/model.hpp"
#include "imsep/oracles.hpp"
#include "imsep/separation.hpp"
#include "imsep/separator_or_model.hpp"
#include "imsep/subexp.hpp"
#include "imsep/tree_decomposition.hpp"

using namespace imsep;
using nlohmann::json;

namespace {

// Shared flags plus the manifest under construction. Every subcommand fills
// parameters/outputs/verdicts and hands a result document to finish().
struct RunContext {
    std::uint64_t seed = 0;
    double gamma = 0.0;        // 0 keeps the size-derived congestion target
    double eps = 0.25;
    double resample_cap = 100.0;
    int leaf_size = 8;
    std::string format = "json";
    std::string out_path;
    std::string manifest_path;

    json parameters = json::object();
    json outputs = json::object();
    json verdicts = json::object();
};

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << text << '\n';
}

// Result goes to --out (stdout otherwise), the manifest to --manifest; when
// both stay on stdout they share one document. Exit 0 only if every recorded
// verdict holds.
int finish(RunContext& ctx, const std::string& command, const json& result,
           const std::string& raw_text = "") {
    json manifest{{"command", command},
                  {"parameters", ctx.parameters},
                  {"seed", ctx.seed},
                  {"overrides",
                   {{"gamma", ctx.gamma},
                    {"eps", ctx.eps},
                    {"resample_cap", ctx.resample_cap},
                    {"leaf_size", ctx.leaf_size}}},
                  {"outputs", ctx.outputs},
                  {"verdicts", ctx.verdicts}};

    bool text_mode = !raw_text.empty();
    if (!ctx.out_path.empty()) {
        write_text(ctx.out_path, text_mode ? raw_text : result.dump(2));
        if (!ctx.manifest_path.empty())
            write_text(ctx.manifest_path, manifest.dump(2));
        else
            std::cout << manifest.dump(2) << '\n';
    } else if (text_mode) {
        std::cout << raw_text << '\n';
        if (!ctx.manifest_path.empty())
            write_text(ctx.manifest_path, manifest.dump(2));
        else
            std::cout << manifest.dump(2) << '\n';
    } else if (!ctx.manifest_path.empty()) {
        write_text(ctx.manifest_path, manifest.dump(2));
        std::cout << result.dump(2) << '\n';
    } else {
        std::cout << json{{"manifest", manifest}, {"result", result}}.dump(2) << '\n';
    }

    for (auto& [key, value] : ctx.verdicts.items()) {
        if (!value.get<bool>()) {
            std::cerr << "verification failed: " << key << '\n';
            return 1;
        }
    }
    return 0;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    return j;
}

json model_to_json(const InducedMinorModel& m) { return json{{"branch_sets", m.branch_sets}}; }

InducedMinorModel model_from_json(const json& j) {
    InducedMinorModel m;
    m.branch_sets = j.at("branch_sets").get<std::vector<std::vector<int>>>();
    return m;
}

json separation_to_json(const Separation& s) {
    return json{{"a", s.a}, {"s", s.s}, {"b", s.b}};
}

Separation separation_from_json(const json& j) {
    Separation s;
    s.a = j.at("a").get<std::vector<int>>();
    s.s = j.at("s").get<std::vector<int>>();
    s.b = j.at("b").get<std::vector<int>>();
    return s;
}

// {"version": 1, "graph": <graph>, "relations": [[u, v, mask], ...]}
BinaryCSPInstance csp_from_json(const json& j) {
    BinaryCSPInstance csp;
    csp.constraint_graph = graph_from_json(j.at("graph"));
    for (const auto& r : j.at("relations")) {
        if (!r.is_array() || r.size() != 3)
            throw std::invalid_argument("csp json: relation entries are [u, v, mask]");
        int u = r[0], v = r[1], mask = r[2];
        if (u > v) std::swap(u, v);
        csp.relations[{u, v}] = mask;
    }
    if (auto err = check_csp(csp)) throw std::invalid_argument("csp json: " + *err);
    return csp;
}

json midp_to_json(const MIDPInstance& inst) {
    return json{{"g", graph_to_json(inst.g)},
                {"parts", inst.parts},
                {"terminals", inst.terminals}};
}

json anchored_to_json(const AnchoredInstance& inst) {
    return json{{"g", graph_to_json(inst.g)},
                {"t", graph_to_json(inst.t)},
                {"anchors", inst.anchors}};
}

json imt_to_json(const IMTInstance& inst) {
    return json{{"g", graph_to_json(inst.g)},
                {"t", graph_to_json(inst.t)},
                {"h", inst.h},
                {"realized", inst.realized},
                {"skipped_heights", inst.skipped_heights}};
}

bool is_independent_set(const Graph& g, const std::vector<int>& set) {
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (set[i] < 0 || set[i] >= g.vertex_count()) return false;
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (set[i] == set[j] || g.has_edge(set[i], set[j])) return false;
    }
    return true;
}

FindOptions find_options(const RunContext& ctx) {
    FindOptions opt;
    opt.gamma_override = ctx.gamma;
    opt.flow.eps = ctx.eps;
    opt.embed.resample_multiplier = ctx.resample_cap;
    return opt;
}

struct GenArgs {
    std::string kind;
    int rows = 3, cols = 3;
    int n = 8;
    double p = 0.5;
    int b = 2;
    int levels = 3;
};

int cmd_gen(RunContext& ctx, const GenArgs& a) {
    Graph g;
    ctx.parameters["kind"] = a.kind;
    if (a.kind == "grid") {
        g = gen_grid(a.rows, a.cols);
        ctx.parameters["rows"] = a.rows;
        ctx.parameters["cols"] = a.cols;
    } else if (a.kind == "random") {
        g = gen_gnp(a.n, a.p, ctx.seed);
        ctx.parameters["n"] = a.n;
        ctx.parameters["p"] = a.p;
    } else if (a.kind == "complete") {
        g = gen_complete(a.n);
        ctx.parameters["n"] = a.n;
    } else if (a.kind == "path") {
        g = gen_path(a.n);
        ctx.parameters["n"] = a.n;
    } else if (a.kind == "cycle") {
        g = gen_cycle(a.n);
        ctx.parameters["n"] = a.n;
    } else if (a.kind == "bs") {
        g = bs_generate(a.b);
        ctx.parameters["b"] = a.b;
    } else {
        g = gen_complete_binary_tree(a.levels);
        ctx.parameters["levels"] = a.levels;
    }
    ctx.outputs["vertices"] = g.vertex_count();
    ctx.outputs["edges"] = g.edge_count();
    if (ctx.format == "dot") return finish(ctx, "gen", json(), graph_to_dot(g));
    return finish(ctx, "gen", graph_to_json(g));
}

int cmd_separate(RunContext& ctx, const std::string& gpath, const std::string& hpath) {
    Graph g = read_graph_file(gpath);
    Graph h = read_graph_file(hpath);
    ctx.parameters = {{"graph", gpath}, {"pattern", hpath}};
    auto res = find_separator_or_model(g, h, ctx.seed, find_options(ctx));
    json result;
    if (const auto* sep = std::get_if<Separation>(&res)) {
        ctx.outputs["kind"] = "separator";
        ctx.outputs["separator_size"] = sep->s.size();
        ctx.outputs["side_sizes"] = json::array({sep->a.size(), sep->b.size()});
        ctx.outputs["sparsity"] = separation_sparsity(g, *sep);
        ctx.verdicts["separation_valid"] = !check_separation(g, *sep).has_value();
        ctx.verdicts["separation_balanced"] = is_balanced(g, *sep);
        result = json{{"kind", "separator"}, {"separation", separation_to_json(*sep)}};
    } else {
        const auto& m = std::get<InducedMinorModel>(res);
        std::size_t used = 0;
        for (const auto& bs : m.branch_sets) used += bs.size();
        ctx.outputs["kind"] = "model";
        ctx.outputs["model_vertices_used"] = used;
        ctx.verdicts["model_valid"] = !check_induced_minor_model(g, h, m).has_value();
        result = json{{"kind", "model"}, {"model", model_to_json(m)}};
    }
    return finish(ctx, "separate", result);
}

int cmd_mis(RunContext& ctx, const std::string& gpath, const std::string& hpath,
            bool brute_check) {
    Graph g = read_graph_file(gpath);
    Graph h = hpath.empty() ? gen_complete(5) : read_graph_file(hpath);
    ctx.parameters = {{"graph", gpath}, {"pattern", hpath.empty() ? "K5" : hpath}};
    SubexpOptions opt;
    opt.leaf_size = ctx.leaf_size;
    opt.seed = ctx.seed;
    opt.find = find_options(ctx);
    MisResult r = solve_mis(g, h, opt);
    ctx.outputs["size"] = r.set.size();
    ctx.outputs["leaves"] = r.leaves;
    ctx.outputs["used_fallback"] = r.used_fallback;
    ctx.verdicts["independent"] = is_independent_set(g, r.set);
    if (brute_check) {
        auto best = brute_max_independent_set(g, 26);
        ctx.outputs["brute_size"] = best.size();
        ctx.verdicts["matches_brute"] = best.size() == r.set.size();
    }
    return finish(ctx, "mis", json{{"set", r.set}});
}

int cmd_imtest(RunContext& ctx, const std::string& gpath, const std::string& hpath) {
    Graph g = read_graph_file(gpath);
    Graph h = read_graph_file(hpath);
    ctx.parameters = {{"graph", gpath}, {"pattern", hpath}};
    SubexpOptions opt;
    opt.leaf_size = ctx.leaf_size;
    opt.seed = ctx.seed;
    opt.find = find_options(ctx);
    auto m = induced_minor_test(g, h, opt);
    ctx.outputs["present"] = m.has_value();
    json result{{"present", m.has_value()}, {"model", nullptr}};
    if (m) {
        ctx.verdicts["model_valid"] = !check_induced_minor_model(g, h, *m).has_value();
        result["model"] = model_to_json(*m);
    }
    return finish(ctx, "imtest", result);
}

int cmd_reduce(RunContext& ctx, const std::string& csp_path, const std::string& stage,
               int h, long long budget, bool witness) {
    BinaryCSPInstance csp = csp_from_json(load_json(csp_path));
    int n = csp.constraint_graph.vertex_count();
    int b = 0;
    while ((1 << b) < n) ++b;
    if ((1 << b) != n || b < 2)
        throw std::invalid_argument(
            "reduce: the constraint graph must be a binary shift graph on >= 4 vertices");
    ctx.parameters = {{"csp", csp_path}, {"stage", stage}, {"b", b},
                      {"h", h}, {"budget", budget}};

    auto red = csp_to_midp(csp, bs_partition(b));
    ctx.verdicts["midp_instance_valid"] = !check_midp_instance(red.instance).has_value();
    json widths = json::array();
    int stride = red.layout.stride();
    for (int i = 0; i < 4; ++i) {
        std::vector<int> range;
        for (int v = i * stride; v < (i + 2) * stride; ++v) range.push_back(v);
        Graph sub = red.instance.g.induced(range);
        ctx.verdicts["pair_certificate_" + std::to_string(i)] =
            !check_path_decomposition(sub, red.pair_certificates[i]).has_value();
        widths.push_back(path_width(red.pair_certificates[i]));
    }
    ctx.outputs["pair_certificate_widths"] = widths;
    ctx.outputs["midp_vertices"] = red.instance.g.vertex_count();
    json result{{"midp", midp_to_json(red.instance)}};

    std::optional<AnchoredInstance> anc;
    std::optional<IMTInstance> imt;
    if (stage == "anchored" || stage == "imt") {
        anc = midp_to_anchored(red.instance);
        ctx.outputs["anchored_vertices"] = anc->g.vertex_count();
        ctx.outputs["tree_vertices"] = anc->t.vertex_count();
        ctx.outputs["anchor_count"] = anc->anchors.size();
        result["anchored"] = anchored_to_json(*anc);
    }
    if (stage == "imt") {
        imt = anchored_to_imt(*anc, h, budget);
        ctx.outputs["imt_vertices"] = imt->g.vertex_count();
        ctx.outputs["imt_tree_vertices"] = imt->t.vertex_count();
        ctx.outputs["realized_attachments"] = imt->realized;
        ctx.outputs["skipped_heights"] = imt->skipped_heights;
        result["imt"] = imt_to_json(*imt);
    }

    if (witness) {
        if (n > 16)
            throw std::invalid_argument("reduce: witness search needs at most 16 variables");
        auto asg = solve_csp_brute(csp);
        ctx.outputs["satisfiable"] = asg.has_value();
        if (asg) {
            if (!anc) anc = midp_to_anchored(red.instance);
            if (!imt) imt = anchored_to_imt(*anc, h, budget);
            ForwardWitness w = forward_witness(csp, *asg, red, *anc, *imt);
            ctx.verdicts["witness_midp"] = verify_midp_solution(red.instance, w.midp_paths);
            ctx.verdicts["witness_anchored"] =
                !check_anchored_model(*anc, w.anchored_model).has_value();
            // The quadratic model check stays feasible on small attachments only.
            if (imt->t.vertex_count() <= 5000)
                ctx.verdicts["witness_imt"] =
                    !check_induced_minor_model(imt->g, imt->t, w.imt_model).has_value();
            result["witness"] = json{{"assignment", *asg}, {"midp_paths", w.midp_paths}};
        }
    }
    return finish(ctx, "reduce", result);
}

int cmd_verify(RunContext& ctx, const std::string& gpath, const std::string& model_path,
               const std::string& pattern_path, const std::string& sep_path,
               bool require_balanced) {
    Graph g = read_graph_file(gpath);
    ctx.parameters = {{"graph", gpath}};
    json result = json::object();
    if (model_path.empty() && sep_path.empty())
        throw std::invalid_argument("verify: nothing to check, pass --model or --separation");
    if (!model_path.empty()) {
        if (pattern_path.empty())
            throw std::invalid_argument("verify: --model needs --pattern");
        Graph h = read_graph_file(pattern_path);
        json mj = load_json(model_path);
        // Accept the result files separate/imtest write, not just bare models.
        if (mj.is_object() && mj.contains("model")) mj = mj["model"];
        auto err = check_induced_minor_model(g, h, model_from_json(mj));
        ctx.parameters["model"] = model_path;
        ctx.parameters["pattern"] = pattern_path;
        ctx.verdicts["model_valid"] = !err.has_value();
        result["model_error"] = err ? json(*err) : json(nullptr);
    }
    if (!sep_path.empty()) {
        json sj = load_json(sep_path);
        if (sj.is_object() && sj.contains("separation")) sj = sj["separation"];
        Separation sep = separation_from_json(sj);
        auto err = check_separation(g, sep);
        ctx.parameters["separation"] = sep_path;
        ctx.verdicts["separation_valid"] = !err.has_value();
        if (require_balanced) ctx.verdicts["separation_balanced"] = is_balanced(g, sep);
        result["separation_error"] = err ? json(*err) : json(nullptr);
    }
    return finish(ctx, "verify", result);
}

int cmd_bs(RunContext& ctx, int b, bool partition, bool flow) {
    Graph g = bs_generate(b);
    ctx.parameters = {{"b", b}, {"partition", partition}, {"flow", flow}};
    ctx.outputs["vertices"] = g.vertex_count();
    ctx.outputs["edges"] = g.edge_count();
    json result{{"graph", graph_to_json(g)}};
    if (partition) {
        ShiftPartition sp = bs_partition(b);
        json widths = json::array();
        bool bounded = true;
        for (int i = 0; i < 4; ++i) {
            Graph part = bs_part_with_spine(b, sp.parts[i]);
            ctx.verdicts["part_certificate_" + std::to_string(i)] =
                !check_path_decomposition(part, sp.certificates[i]).has_value();
            int w = path_width(sp.certificates[i]);
            widths.push_back(w);
            bounded = bounded && w <= 16;
        }
        ctx.outputs["certificate_widths"] = widths;
        ctx.verdicts["certificate_width_bounded"] = bounded;
        result["parts"] = sp.parts;
        result["certificates"] = sp.certificates;
    }
    if (flow) {
        if (b > 8) throw std::invalid_argument("bs: --flow supports b <= 8");
        VertexFlow f = bs_canonical_flow(b);
        double congestion = flow_congestion(g, f);
        ctx.outputs["congestion"] = congestion;
        ctx.outputs["flow_paths"] = f.paths.size();
        ctx.verdicts["flow_valid"] = !check_concurrent_flow(g, f).has_value();
        ctx.verdicts["congestion_bounded"] = congestion <= (b + 1) * (1 << b) + 1e-9;
        if (b <= 4) {
            json paths = json::array();
            for (const auto& p : f.paths)
                paths.push_back(json{{"src", p.src},
                                     {"dst", p.dst},
                                     {"weight", p.weight},
                                     {"vertices", p.vertices}});
            result["flow"] = paths;
        }
    }
    return finish(ctx, "bs", result);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"induced-minor separators, solvers and reduction chains"};
    app.require_subcommand(1);

    RunContext ctx;
    app.add_option("--seed", ctx.seed, "random seed")->envname("IMSEP_SEED");
    app.add_option("--gamma", ctx.gamma, "congestion target override, 0 derives it from sizes")
        ->envname("IMSEP_GAMMA");
    app.add_option("--eps", ctx.eps, "multiplicative-weights slack")->envname("IMSEP_EPS");
    app.add_option("--resample-cap", ctx.resample_cap, "resampling budget multiplier")
        ->envname("IMSEP_RESAMPLE_CAP");
    app.add_option("--leaf-size", ctx.leaf_size, "decomposition leaf size")
        ->envname("IMSEP_LEAF_SIZE");
    app.add_option("--format", ctx.format, "graph output format")
        ->check(CLI::IsMember({"json", "dot"}))
        ->envname("IMSEP_FORMAT");
    app.add_option("--out", ctx.out_path, "write the result here instead of stdout");
    app.add_option("--manifest", ctx.manifest_path, "write the run manifest here");

    int rc = 0;

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a graph");
    gen->fallthrough();
    gen->add_option("--kind", gen_args.kind, "graph family")
        ->required()
        ->check(CLI::IsMember({"grid", "random", "complete", "path", "cycle", "bs", "btree"}));
    gen->add_option("--rows", gen_args.rows, "grid rows");
    gen->add_option("--cols", gen_args.cols, "grid columns");
    gen->add_option("--n", gen_args.n, "vertex count");
    gen->add_option("--p", gen_args.p, "edge probability");
    gen->add_option("--b", gen_args.b, "shift graph order");
    gen->add_option("--levels", gen_args.levels, "binary tree levels");
    gen->callback([&] { rc = cmd_gen(ctx, gen_args); });

    std::string sep_graph, sep_pattern;
    auto* separate = app.add_subcommand("separate", "balanced separator or pattern model");
    separate->fallthrough();
    separate->add_option("--graph", sep_graph, "host graph file")->required();
    separate->add_option("--pattern", sep_pattern, "pattern graph file")->required();
    separate->callback([&] { rc = cmd_separate(ctx, sep_graph, sep_pattern); });

    std::string mis_graph, mis_pattern;
    bool mis_brute = false;
    auto* mis = app.add_subcommand("mis", "maximum independent set");
    mis->fallthrough();
    mis->add_option("--graph", mis_graph, "graph file")->required();
    mis->add_option("--pattern", mis_pattern,
                    "pattern kept absent from separators (default: K5)");
    mis->add_flag("--brute-check", mis_brute, "cross-check against exhaustive search");
    mis->callback([&] { rc = cmd_mis(ctx, mis_graph, mis_pattern, mis_brute); });

    std::string imt_graph, imt_pattern;
    auto* imtest = app.add_subcommand("imtest", "induced-minor presence test");
    imtest->fallthrough();
    imtest->add_option("--graph", imt_graph, "host graph file")->required();
    imtest->add_option("--pattern", imt_pattern, "pattern graph file")->required();
    imtest->callback([&] { rc = cmd_imtest(ctx, imt_graph, imt_pattern); });

    std::string red_csp, red_stage = "imt";
    int red_h = 2;
    long long red_budget = 200000;
    bool red_witness = false;
    auto* reduce = app.add_subcommand("reduce", "csp through the reduction chain");
    reduce->fallthrough();
    reduce->add_option("--csp", red_csp, "csp instance file")->required();
    reduce->add_option("--stage", red_stage, "last stage to build")
        ->check(CLI::IsMember({"midp", "anchored", "imt"}));
    reduce->add_option("--height", red_h, "attachment height offset");
    reduce->add_option("--budget", red_budget, "attachment vertex budget");
    reduce->add_flag("--witness", red_witness,
                     "solve the csp and thread a witness through the stages");
    reduce->callback(
        [&] { rc = cmd_reduce(ctx, red_csp, red_stage, red_h, red_budget, red_witness); });

    std::string ver_graph, ver_model, ver_pattern, ver_sep;
    bool ver_balanced = false;
    auto* verify = app.add_subcommand("verify", "re-check stored certificates");
    verify->fallthrough();
    verify->add_option("--graph", ver_graph, "host graph file")->required();
    verify->add_option("--model", ver_model, "induced minor model file");
    verify->add_option("--pattern", ver_pattern, "pattern for the model check");
    verify->add_option("--separation", ver_sep, "separation file");
    verify->add_flag("--balanced", ver_balanced, "also require balance");
    verify->callback([&] {
        rc = cmd_verify(ctx, ver_graph, ver_model, ver_pattern, ver_sep, ver_balanced);
    });

    int bs_b = 2;
    bool bs_part = false, bs_flow = false;
    auto* bs = app.add_subcommand("bs", "binary shift graph artifacts");
    bs->fallthrough();
    bs->add_option("--b", bs_b, "graph order exponent")->required();
    bs->add_flag("--partition", bs_part, "emit the four-part edge partition");
    bs->add_flag("--flow", bs_flow, "emit the canonical all-pairs flow");
    bs->callback([&] { rc = cmd_bs(ctx, bs_b, bs_part, bs_flow); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}
