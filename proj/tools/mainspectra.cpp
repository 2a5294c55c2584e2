// mainspectra: batch analysis, constructions and switching-class censuses.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mainspectra/mainspectra.hpp"

namespace ms = mainspectra;
using ms::json;

namespace {

struct Options {
    std::string format;  // empty: per-command default

    bool seidel = false;
    bool equitable = false;
    std::string input;

    std::string recipe;
    int lambda = 2;
    int r = 2;
    bool component = false;
    long long alpha = 0, beta = 0;
    std::string graph;
    std::string edge;
    int k = 1;

    std::optional<int> census_r;
    std::string base;
    std::string convention = "up-to-complement";
    std::string reference;
    unsigned workers = 1;
    std::string audit_out;
    bool exhaustive_seidel = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// graph6, or "n: u-v u-v ..." (vertices 0-based).
ms::Graph parse_graph_line(const std::string& line) {
    const auto colon = line.find(':');
    if (colon == std::string::npos) return ms::parse_graph6(line);
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(line.substr(0, colon), &used);
        if (line.substr(0, colon).find_first_not_of(" \t0123456789") != std::string::npos) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("bad vertex count before ':'");
    }
    ms::GraphBuilder b(n);
    std::istringstream rest(line.substr(colon + 1));
    std::string tok;
    while (rest >> tok) {
        const auto dash = tok.find('-');
        if (dash == std::string::npos || dash == 0 || dash + 1 == tok.size()) throw std::invalid_argument("bad edge '" + tok + "'");
        int u = 0, v = 0;
        try {
            std::size_t a = 0, c = 0;
            u = std::stoi(tok.substr(0, dash), &a);
            v = std::stoi(tok.substr(dash + 1), &c);
            if (a != dash || c != tok.size() - dash - 1) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("bad edge '" + tok + "'");
        }
        b.add_edge(u, v);
    }
    return std::move(b).build();
}

ms::Edge parse_edge(const std::string& text) {
    const auto dash = text.find('-');
    if (dash == std::string::npos) throw UsageError("edge must look like u-v, got '" + text + "'");
    try {
        return {std::stoi(text.substr(0, dash)), std::stoi(text.substr(dash + 1))};
    } catch (const std::exception&) {
        throw UsageError("edge must look like u-v, got '" + text + "'");
    }
}

std::string csv_field(const std::optional<ms::Rational>& q) { return q ? ms::to_string(*q) : ""; }

json equitable_json(const ms::Graph& g) {
    const auto pi = ms::valency_partition(g);
    const auto refined = ms::refine_to_equitable(g, pi);
    return {{"valency_partition", ms::to_json(pi)},
            {"valency_partition_equitable", ms::is_equitable(g, pi)},
            {"coarsest_equitable_refinement", ms::to_json(refined)},
            {"quotient", ms::to_json(ms::quotient_matrix(g, refined))},
            {"main_bound", ms::main_bound(g, refined)}};
}

int cmd_analyze(const Options& opt) {
    const std::string format = opt.format.empty() ? "json" : opt.format;
    if (format == "graph6") throw UsageError("analyze: output format graph6 is not supported; use json or csv");

    std::ifstream file;
    if (!opt.input.empty() && opt.input != "-") {
        file.open(opt.input);
        if (!file) throw UsageError("analyze: cannot open '" + opt.input + "'");
    }
    std::istream& in = opt.input.empty() || opt.input == "-" ? std::cin : file;

    if (format == "csv") {
        std::cout << "line,graph6,n,edges,main_count,regular,connected,alpha,beta,harmonic_delta,mu0,mu1,spectral_radius";
        if (opt.seidel) std::cout << ",seidel_distinct,strong,regular_two_graph";
        if (opt.equitable) std::cout << ",equitable_blocks,main_bound";
        std::cout << '\n';
    }

    int failures = 0;
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        try {
            const ms::Graph g = parse_graph_line(line);
            const auto report = ms::analyze(g);
            if (format == "json") {
                json j{{"line", lineno}, {"graph6", ms::write_graph6(g)}, {"report", ms::to_json(report)}};
                if (opt.seidel) j["seidel"] = ms::to_json(ms::seidel_report(g));
                if (opt.equitable) j["equitable"] = equitable_json(g);
                std::cout << j.dump() << '\n';
            } else {
                std::ostringstream row;
                row << lineno << ',' << ms::write_graph6(g) << ',' << report.n << ',' << report.edges << ','
                    << report.main_count << ',' << (report.regular ? "true" : "false") << ','
                    << (report.connected ? "true" : "false") << ','
                    << csv_field(report.two_walk ? std::optional(report.two_walk->alpha) : std::nullopt) << ','
                    << csv_field(report.two_walk ? std::optional(report.two_walk->beta) : std::nullopt) << ','
                    << csv_field(report.harmonic_delta) << ','
                    << (report.main_values ? report.main_values->mu0_exact() : "") << ','
                    << (report.main_values ? report.main_values->mu1_exact() : "") << ',' << report.spectral_radius;
                if (opt.seidel) {
                    const auto s = ms::seidel_report(g);
                    row << ',' << s.distinct_count << ',' << (s.strong ? "true" : "false") << ','
                        << (s.regular_two_graph ? "true" : "false");
                }
                if (opt.equitable) {
                    const auto refined = ms::refine_to_equitable(g, ms::valency_partition(g));
                    row << ',' << refined.size() << ',' << ms::main_bound(g, refined);
                }
                std::cout << row.str() << '\n';
            }
        } catch (const std::exception& e) {
            std::cerr << "line " << lineno << ": " << e.what() << '\n';
            ++failures;
        }
    }
    return failures ? 1 : 0;
}

ms::Graph read_first_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] != '#') return parse_graph_line(line);
    }
    throw UsageError("'" + path + "' contains no graph");
}

int cmd_construct(const Options& opt) {
    const std::string format = opt.format.empty() ? "graph6" : opt.format;
    if (format == "csv") throw UsageError("construct: output format csv is not supported; use graph6 or json");

    json params;
    json extra = json::object();
    ms::Graph g = ms::empty_graph(1);
    const std::string& recipe = opt.recipe;
    if (recipe == "t-lambda") {
        params = {{"lambda", opt.lambda}};
        g = ms::t_lambda_tree(opt.lambda);
    } else if (recipe == "cone") {
        if (opt.graph.empty()) throw UsageError("construct cone: --graph is required");
        const auto base = parse_graph_line(opt.graph);
        params = {{"graph", ms::write_graph6(base)}};
        g = ms::cone_over_regular(base);
    } else if (recipe == "biregular") {
        params = {{"alpha", opt.alpha}, {"beta", opt.beta}};
        if (opt.alpha >= 0 && opt.alpha * opt.alpha + 4 * opt.beta == 4) {
            const auto cert = ms::boundary_impossibility(opt.alpha, opt.beta);
            std::cerr << "construct biregular: no connected equitable biregular graph has alpha^2 + 4 beta = 4; "
                         "every admissible quotient has equal row sums"
                      << (opt.alpha % 2 == 0 && opt.alpha >= 4 ? " (try 'construct boundary3' for a 3-valenced witness)" : "")
                      << '\n'
                      << json{{"certificate", ms::to_json(cert)}}.dump(2) << '\n';
            return 1;
        }
        g = ms::equitable_biregular_from(opt.alpha, opt.beta);
    } else if (recipe == "boundary3") {
        params = {{"alpha", opt.alpha}};
        g = ms::three_valenced_boundary(opt.alpha);
    } else if (recipe == "symplectic") {
        params = {{"r", opt.r}, {"component", opt.component}};
        g = opt.component ? ms::sp_component(opt.r) : ms::symplectic_graph(opt.r);
        if (auto p = ms::srg_params(opt.component ? g : ms::sp_component(opt.r))) extra["component_srg"] = ms::to_json(*p);
    } else if (recipe == "splice-chain") {
        const ms::Graph seed = opt.graph.empty() ? ms::cone(ms::cycle_graph(4)) : parse_graph_line(opt.graph);
        const ms::Edge e = opt.edge.empty() ? ms::Edge{seed.order() - 1, 0} : parse_edge(opt.edge);
        params = {{"graph", ms::write_graph6(seed)}, {"edge", {e.u, e.v}}, {"k", opt.k}};
        const auto chain = ms::splice_chain(seed, e, opt.k);
        json designated = json::array();
        for (const auto& d : chain.designated) designated.push_back({d.u, d.v});
        extra["designated_edges"] = designated;
        g = chain.graph;
    } else {
        throw UsageError("construct: unknown recipe '" + recipe + "'");
    }

    const json provenance{{"recipe", recipe}, {"parameters", params}, {"validation", ms::validation_json(g)}};
    json record = provenance;
    for (auto& [key, value] : extra.items()) record[key] = value;
    if (format == "json") {
        record["graph6"] = ms::write_graph6(g);
        std::cout << record.dump() << '\n';
    } else {
        std::cout << ms::write_graph6(g) << '\n';
        std::cerr << record.dump() << '\n';
    }
    return 0;
}

int cmd_census(const Options& opt) {
    const std::string format = opt.format.empty() ? "csv" : opt.format;
    if (format == "graph6") throw UsageError("census: output format graph6 is not supported; use csv or json");
    if (opt.workers < 1) throw UsageError("census: --workers must be at least 1");
    if (opt.census_r && !opt.base.empty()) throw UsageError("census: --r and --base are exclusive");

    const ms::Graph base = opt.base.empty() ? ms::symplectic_graph(opt.census_r.value_or(2)) : read_first_graph(opt.base);
    ms::CensusOptions copt;
    copt.convention = ms::parse_convention(opt.convention);
    copt.workers = opt.workers;
    copt.exhaustive_seidel = opt.exhaustive_seidel;
    const auto table = ms::census_table(base, copt);

    std::optional<json> audit;
    if (!opt.reference.empty()) {
        std::ifstream in(opt.reference);
        if (!in) throw UsageError("census: cannot open reference '" + opt.reference + "'");
        const auto reference = ms::parse_reference_csv(in);
        json audits = json::array();
        for (auto conv : {ms::Convention::subsets_up_to_complement, ms::Convention::all_subsets}) {
            if (conv == copt.convention) {
                audits.push_back(ms::to_json(ms::compare_to_reference(table, reference)));
            } else {
                auto other = copt;
                other.convention = conv;
                audits.push_back(ms::to_json(ms::compare_to_reference(ms::census_table(base, other), reference)));
            }
        }
        audit = json{{"base_graph6", table.base_graph6}, {"reference", opt.reference}, {"audits", audits}};
    }

    if (format == "json") {
        json out{{"census", ms::to_json(table)}};
        if (audit) out["audit"] = *audit;
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << ms::census_csv(table);
    }
    if (audit) {
        if (!opt.audit_out.empty()) {
            std::ofstream out(opt.audit_out);
            if (!out) throw UsageError("census: cannot write '" + opt.audit_out + "'");
            out << audit->dump(2) << '\n';
        } else if (format != "json") {
            std::cerr << audit->dump(2) << '\n';
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Main eigenvalues, Seidel switching and 2-walk linear graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv", "graph6"}));

    auto* analyze = app.add_subcommand("analyze", "Analyze graph6 or 'n: u-v ...' lines (stdin when FILE is absent)");
    analyze->add_flag("--seidel", opt.seidel, "Add the Seidel report");
    analyze->add_flag("--equitable", opt.equitable, "Add the equitable refinement and quotient");
    analyze->add_option("file", opt.input, "Input file");

    auto* construct = app.add_subcommand("construct", "Build a graph; graph6 on stdout, provenance JSON on stderr");
    construct->add_option("recipe", opt.recipe, "t-lambda | cone | biregular | boundary3 | symplectic | splice-chain")
        ->required()
        ->check(CLI::IsMember({"t-lambda", "cone", "biregular", "boundary3", "symplectic", "splice-chain"}));
    construct->add_option("--lambda", opt.lambda, "t-lambda: lambda");
    construct->add_option("--r", opt.r, "symplectic: r");
    construct->add_flag("--component", opt.component, "symplectic: drop the isolated vertex");
    construct->add_option("--alpha", opt.alpha, "biregular, boundary3: alpha");
    construct->add_option("--beta", opt.beta, "biregular: beta");
    construct->add_option("--graph", opt.graph, "cone, splice-chain: input graph (graph6 or 'n: u-v ...')");
    construct->add_option("--edge", opt.edge, "splice-chain: edge u-v (default: hub to vertex 0 of the default seed)");
    construct->add_option("--k", opt.k, "splice-chain: family member");

    auto* census = app.add_subcommand("census", "Census of a switching class (CSV on stdout)");
    census->add_option("--r", opt.census_r, "Symplectic base on 2^(2r) vertices (default 2)");
    census->add_option("--base", opt.base, "File whose first line is the base graph");
    census->add_option("--convention", opt.convention, "up-to-complement | all-subsets")
        ->check(CLI::IsMember({"up-to-complement", "all-subsets"}));
    census->add_option("--reference", opt.reference, "Reference CSV to audit against");
    census->add_option("--workers", opt.workers, "Worker threads")->check(CLI::PositiveNumber);
    census->add_option("--audit-out", opt.audit_out, "Write the audit JSON here (default: stderr)");
    census->add_flag("--exhaustive-seidel", opt.exhaustive_seidel, "Check the Seidel polynomial of every member");

    CLI11_PARSE(app, argc, argv);
    try {
        if (analyze->parsed()) return cmd_analyze(opt);
        if (construct->parsed()) return cmd_construct(opt);
        return cmd_census(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
