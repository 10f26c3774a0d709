// fraccover: fractional edge/vertex covers of hypergraphs, support
// reduction, duality transfer, and a desk-scale fractional-hypertree-width
// checker. Exit status: 0 on a computed decision, 2 on a negative fhw
// decision, 1 on any error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fraccover/fhw.hpp"
#include "fraccover/json_io.hpp"
#include "fraccover/support_reduction.hpp"

using namespace fraccover;

namespace {

struct Options {
    std::string input;
    std::string format = "text";  // or "json"
    int c = 2;
    int d = -1;
    std::string k = "1";
    int q = 1;
    long long cap = 1000000;
    bool cap_set = false;
    long long seed = 0;  // reserved for randomized subcommands
    std::vector<std::string> vertices;
    std::string gamma_path;
    bool with_trace = false;
    bool brute = false;
    bool deepen = false;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

long long effective_cap(const Options& opt) {
    if (opt.cap_set) return opt.cap;
    if (const char* env = std::getenv("FRACCOVER_CAP")) {
        try {
            return std::stoll(env);
        } catch (...) {
            throw Error("FRACCOVER_CAP is not an integer");
        }
    }
    return opt.cap;
}

void emit(const Options& opt, const Json& j, const std::string& text) {
    if (opt.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_analyze(const Options& opt) {
    Hypergraph h = parse_hypergraph(slurp(opt.input));
    auto [reduced, class_map] = reduce(h);

    Json j;
    j["vertices"] = h.vertex_count();
    j["edges"] = h.edge_count();
    j["reduced"]["vertices"] = reduced.vertex_count();
    j["reduced"]["edges"] = reduced.edge_count();
    Json merged = Json::object();
    for (const auto& [from, to] : class_map)
        if (from != to) merged[from] = to;
    j["reduced"]["merged"] = merged;

    std::ostringstream text;
    text << "vertices: " << h.vertex_count() << ", edges: " << h.edge_count() << "\n";
    text << "reduced: " << reduced.vertex_count() << " vertices ("
         << (h.vertex_count() - reduced.vertex_count()) << " merged)\n";

    Json profiles = Json::array();
    for (int c = 1; c <= std::min(4, reduced.edge_count()); ++c) {
        IntersectionProfile p = multi_intersection(reduced, c);
        Json entry;
        entry["c"] = p.c;
        entry["d"] = p.d;
        entry["witness"] = p.witness;
        profiles.push_back(entry);
        text << "intersection profile c=" << p.c << ": d=" << p.d << " (witness:";
        for (const auto& name : p.witness) text << " " << name;
        text << ")\n";
    }
    j["profile"] = profiles;

    if (opt.d >= 0) {
        CdCheck check = is_cd(reduced, opt.c, opt.d);
        j["is_cd"]["c"] = opt.c;
        j["is_cd"]["d"] = opt.d;
        j["is_cd"]["holds"] = check.holds;
        j["is_cd"]["witness"] = check.witness;
        text << "(" << opt.c << "," << opt.d << ")-hypergraph: "
             << (check.holds ? "yes" : "no") << "\n";
    }
    emit(opt, j, text.str());
    return 0;
}

int cmd_cover(const Options& opt) {
    Hypergraph h = parse_hypergraph(slurp(opt.input));
    IdSet X;
    if (opt.vertices.empty()) {
        X = h.all_vertices();
    } else {
        for (const auto& name : opt.vertices) X.push_back(h.vertex_id(name));
        X = sorted_unique(std::move(X));
    }
    auto [rho, gamma] = edge_cover_number(h, X);
    Json j = weight_function_to_json(gamma);
    j["target_size"] = X.size();

    std::ostringstream text;
    text << "fractional edge cover number: " << rat_str(rho) << "\n";
    text << "support: " << gamma.support().size() << "\n";
    for (int e : gamma.support())
        text << "  " << h.edge(e).name << " = " << rat_str(gamma[e]) << "\n";
    emit(opt, j, text.str());
    return 0;
}

int cmd_vcover(const Options& opt) {
    Hypergraph h = parse_hypergraph(slurp(opt.input));
    auto [tau, beta] = vertex_cover_number(h, h.all_edges());
    Json j = weight_function_to_json(beta);

    std::ostringstream text;
    text << "fractional vertex cover number: " << rat_str(tau) << "\n";
    text << "support: " << beta.support().size() << "\n";
    for (int v : beta.support())
        text << "  " << h.vertex_name(v) << " = " << rat_str(beta[v]) << "\n";
    emit(opt, j, text.str());
    return 0;
}

int cmd_dual(const Options& opt) {
    Hypergraph h = parse_hypergraph(slurp(opt.input));
    auto [reduced, class_map] = reduce(h);
    bool was_reduced = (reduced == h);
    DualMapping m = dualize(reduced);

    Json j;
    j["reduced_first"] = !was_reduced;
    j["dual_file"] = format_hypergraph(m.dual);
    j["edge_of_vertex"] = m.edge_of_vertex;
    j["vertex_of_edge"] = m.vertex_of_edge;

    std::ostringstream text;
    if (!was_reduced) text << "% input was reduced before dualization\n";
    text << format_hypergraph(m.dual);
    emit(opt, j, text.str());
    return 0;
}

int cmd_reduce(const Options& opt) {
    Hypergraph h = parse_hypergraph(slurp(opt.input));
    Rat k = rat_parse(opt.k);

    EdgeWeightFunction gamma(h);
    std::string gamma_source;
    if (opt.gamma_path.empty()) {
        auto [rho, optimal] = edge_cover_number(h, h.all_vertices());
        gamma = optimal;
        gamma_source = "optimal cover of all vertices";
    } else {
        gamma = edge_weight_function_from_json(h, Json::parse(slurp(opt.gamma_path)));
        gamma_source = opt.gamma_path;
    }
    if (gamma.weight() > k)
        throw Error("cover weight " + rat_str(gamma.weight()) + " exceeds k = " + rat_str(k));

    ReduceResult res = reduce_support(h, gamma, opt.c, k, effective_cap(opt));
    bool coverage = is_subset(covered_vertices(gamma), covered_vertices(res.nu));
    if (!coverage) throw Error("internal error: coverage superset violated");

    Json j;
    j["gamma"] = weight_function_to_json(gamma);
    j["gamma_source"] = gamma_source;
    j["nu"] = weight_function_to_json(res.nu);
    j["k"] = rat_str(k);
    j["c"] = opt.c;
    j["final_pair_size"] = res.final_size;
    j["steps"] = res.trace.steps.size();
    j["coverage_superset"] = coverage;
    if (opt.with_trace) j["trace"] = trace_to_json(res.trace);

    std::ostringstream text;
    text << "input cover  (" << gamma_source << "): weight " << rat_str(gamma.weight())
         << ", support " << gamma.support().size() << "\n";
    text << "output cover: weight " << rat_str(res.nu.weight()) << ", support "
         << res.nu.support().size() << " (bound n = " << res.final_size << ")\n";
    text << "coverage superset: " << (coverage ? "yes" : "no") << "\n";
    text << "transformation steps: " << res.trace.steps.size() << "\n";
    if (opt.with_trace) text << trace_to_json(res.trace).dump(2) << "\n";
    emit(opt, j, text.str());
    return 0;
}

int cmd_fhw(const Options& opt) {
    Hypergraph h = parse_hypergraph(slurp(opt.input));
    Rat k = rat_parse(opt.k);

    auto report_td = [&](Json& j, std::ostringstream& text,
                         TreeDecomposition& td) {
        Rat width = td_fractional_width(h, td);
        j["decomposition"] = td_to_json(h, td, width);
        text << "tree decomposition of width " << rat_str(width) << " with "
             << td.nodes.size() << " bags\n";
    };

    Json j;
    std::ostringstream text;
    j["k"] = rat_str(k);
    bool found = false;

    if (opt.deepen) {
        Json levels = Json::array();
        std::optional<TreeDecomposition> td;
        for (int q = 1;; q *= 2) {
            q = std::min(q, std::max(1, h.edge_count()));
            td = fhw_leq_k(h, k, q);
            Json level;
            level["q"] = q;
            level["found"] = td.has_value();
            levels.push_back(level);
            text << "q=" << q << ": " << (td ? "decomposition found" : "none") << "\n";
            if (td || q >= h.edge_count()) break;
        }
        j["levels"] = levels;
        found = td.has_value();
        if (td) report_td(j, text, *td);
    } else {
        auto td = fhw_leq_k(h, k, opt.q);
        j["q"] = opt.q;
        found = td.has_value();
        if (td)
            report_td(j, text, *td);
        else
            text << "no TD within budget (k=" << rat_str(k) << ", q=" << opt.q << ")\n";
    }
    j["found"] = found;

    if (opt.brute) {
        if (h.vertex_count() > 10) throw Error("--brute requires at most 10 vertices");
        auto brute = fhw_bruteforce(h, k);
        j["brute_found"] = brute.has_value();
        text << "brute force: " << (brute ? "decomposition found" : "none") << "\n";
        // The q-limited check may be strictly weaker for small q; it must
        // never claim a decomposition the oracle rules out.
        if (found && !brute) throw Error("internal error: q-limited check found a "
                                         "decomposition the oracle rules out");
    }

    emit(opt, j, text.str());
    return found ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fractional hypergraph covers, support reduction, and fhw checking"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("input", opt.input, "hypergraph file")->required();
        cmd->add_option("--output", opt.format, "output mode: json|text")
            ->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--seed", opt.seed, "seed for randomized subcommands (reserved)");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "reduction and intersection profile");
    add_common(analyze);
    analyze->add_option("--c", opt.c, "arity for the optional (c,d) check");
    analyze->add_option("--d", opt.d, "bound for the optional (c,d) check");

    CLI::App* cover = app.add_subcommand("cover", "fractional edge cover number");
    add_common(cover);
    cover->add_option("--vertices", opt.vertices, "vertices to cover (default: all)")
        ->delimiter(',');

    CLI::App* vcover = app.add_subcommand("vcover", "fractional vertex cover number");
    add_common(vcover);

    CLI::App* dual = app.add_subcommand("dual", "emit the dual hypergraph file");
    add_common(dual);

    CLI::App* red = app.add_subcommand("reduce", "support reduction of an edge cover");
    add_common(red);
    red->add_option("--c", opt.c, "intersection arity c")->required();
    red->add_option("--k", opt.k, "weight budget as p/q")->required();
    red->add_option("--gamma", opt.gamma_path, "input cover JSON (default: optimal cover)");
    red->add_option("--cap", opt.cap, "iteration cap")->each([&](const std::string&) {
        opt.cap_set = true;
    });
    red->add_flag("--trace", opt.with_trace, "include the transformation trace");

    CLI::App* fhw = app.add_subcommand("fhw", "q-limited fractional hypertree width check");
    add_common(fhw);
    fhw->add_option("--k", opt.k, "width budget as p/q")->required();
    fhw->add_option("--q", opt.q, "support limit per bag");
    fhw->add_flag("--brute", opt.brute, "cross-check against the exhaustive oracle");
    fhw->add_flag("--deepen", opt.deepen, "double q from 1 up to |E|");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (analyze->parsed()) return cmd_analyze(opt);
        if (cover->parsed()) return cmd_cover(opt);
        if (vcover->parsed()) return cmd_vcover(opt);
        if (dual->parsed()) return cmd_dual(opt);
        if (red->parsed()) return cmd_reduce(opt);
        if (fhw->parsed()) return cmd_fhw(opt);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const CapExceededError& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        std::cerr << trace_to_json(e.trace).dump(2) << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
