#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "idom/graph.hpp"
#include "idom/graph6.hpp"
#include "idom/labeling.hpp"
#include "idom/operators.hpp"
#include "idom/solver.hpp"
#include "idom/verify.hpp"
#include "idom/witnesses.hpp"

namespace {

using namespace idom;

std::string slurp(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Reads a graph from a file, or from stdin when no path was given. Both
// graph6 and edge-list text are accepted.
Graph read_graph(const std::string& path) {
    if (path.empty() || path == "-") return parse_graph(slurp(std::cin));
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_graph(slurp(in));
}

double budget_from_env(double fallback) {
    const char* raw = std::getenv("IDOM_BUDGET_SECS");
    if (!raw || !*raw) return fallback;
    char* end = nullptr;
    double secs = std::strtod(raw, &end);
    if (end == raw || *end != '\0')
        throw std::invalid_argument("IDOM_BUDGET_SECS is not a number");
    return secs;
}

void emit_graph(const Graph& g, const std::string& format) {
    if (format == "graph6") std::cout << encode_graph6(g) << '\n';
    else if (format == "edges") std::cout << encode_edge_list(g);
    else throw std::invalid_argument("unknown format: " + format);
}

int run_gen(const std::string& family, int n, int p, int q, int m,
            const std::string& format) {
    auto need = [](int value, const char* flag) {
        if (value < 0) throw std::invalid_argument(std::string("missing --") + flag);
        return value;
    };
    Graph g(1);
    if (family == "path") g = generate(GraphFamily::path, {need(n, "n")});
    else if (family == "cycle") g = generate(GraphFamily::cycle, {need(n, "n")});
    else if (family == "complete") g = generate(GraphFamily::complete, {need(n, "n")});
    else if (family == "empty") g = generate(GraphFamily::empty, {need(n, "n")});
    else if (family == "complete_bipartite")
        g = generate(GraphFamily::complete_bipartite, {need(p, "p"), need(q, "q")});
    else if (family == "star") g = generate(GraphFamily::star, {need(m, "m")});
    else throw std::invalid_argument("unknown family: " + family);
    emit_graph(g, format);
    return 0;
}

int run_solve(const std::string& path, const std::string& param, bool json, double budget) {
    Graph g = read_graph(path);
    SolveOptions opt;
    opt.budget_secs = budget;

    if (param == "domination") {
        auto r = gamma_domination(g, opt);
        if (json) {
            nlohmann::ordered_json doc;
            doc["param"] = param;
            doc["value"] = r.value;
            doc["optimal"] = r.optimal;
            doc["certificate"] = r.certificate;
            std::cout << doc.dump() << '\n';
        } else {
            std::cout << r.value << '\n';
            std::string line;
            for (int v : r.certificate) {
                if (!line.empty()) line += ' ';
                line += std::to_string(v);
            }
            std::cout << line << '\n';
        }
        return r.optimal ? 0 : 3;
    }

    SolveResult r;
    if (param == "italian") r = gamma_italian(g, opt);
    else if (param == "roman") r = gamma_roman(g, opt);
    else throw std::invalid_argument("unknown parameter: " + param);

    if (json) {
        nlohmann::ordered_json doc;
        doc["param"] = param;
        doc["value"] = r.value;
        doc["optimal"] = r.optimal;
        doc["certificate"] = r.certificate.str();
        std::cout << doc.dump() << '\n';
    } else {
        std::cout << r.value << '\n' << r.certificate.str() << '\n';
    }
    return r.optimal ? 0 : 3;
}

int run_op_corona(const std::string& g_path, const std::string& h_spec) {
    Graph g = read_graph(g_path);
    Graph h = h_spec == "K1" ? Graph(1) : read_graph(h_spec);
    emit_graph(corona(g, h).first, "graph6");
    return 0;
}

int run_op_twin(const std::string& path, int vertex, const std::string& kind) {
    Graph g = read_graph(path);
    Graph out(1);
    if (kind == "true") out = add_true_twin(g, vertex);
    else if (kind == "false") out = add_false_twin(g, vertex);
    else throw std::invalid_argument("twin kind is true or false");
    emit_graph(out, "graph6");
    return 0;
}

int run_realize(int n, int a) {
    emit_graph(realize_corona_k1(n, a), "graph6");
    return 0;
}

int run_enumerate(const std::string& path) {
    Graph g = read_graph(path);
    for (const auto& f : enumerate_minimum_idfs(g)) std::cout << f.str() << '\n';
    return 0;
}

int run_verify(const std::string& theorem, std::uint64_t seed, int max_n, bool json,
               double budget) {
    SuiteConfig config;
    config.seed = seed;
    if (max_n > 0) config.max_n = max_n;
    config.budget_secs = budget;

    SuiteReport report;
    report.config = config;
    if (theorem.empty()) {
        report = run_suite(config);
    } else {
        const auto& ids = theorem_ids();
        if (std::find(ids.begin(), ids.end(), theorem) == ids.end())
            throw std::invalid_argument("unknown theorem id: " + theorem);
        report.results = check_theorem(theorem, {}, config);
        for (const auto& r : report.results) {
            if (r.status == CheckStatus::pass) ++report.summary.pass;
            else if (r.status == CheckStatus::fail) ++report.summary.fail;
            else ++report.summary.exceeded;
        }
    }

    if (json) {
        std::cout << report_json(report);
    } else {
        for (const auto& r : report.results) {
            std::cout << to_string(r.status) << ' ' << r.theorem << " | " << r.instance
                      << " | expected=" << r.expected << " computed=" << r.computed;
            if (!r.certificate.empty()) std::cout << " | " << r.certificate;
            std::cout << '\n';
        }
        std::cout << "summary: pass=" << report.summary.pass
                  << " fail=" << report.summary.fail
                  << " exceeded=" << report.summary.exceeded << '\n';
    }
    if (report.summary.fail > 0) return 1;
    if (report.summary.exceeded > 0) return 3;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Italian, Roman and ordinary domination toolkit"};
    app.require_subcommand(1);

    std::string gen_family, gen_format = "graph6";
    int gen_n = -1, gen_p = -1, gen_q = -1, gen_m = -1;
    auto* gen = app.add_subcommand("gen", "generate a graph from a named family");
    gen->add_option("--family", gen_family, "path, cycle, complete, empty, complete_bipartite, star")
        ->required();
    gen->add_option("--n", gen_n, "order for path/cycle/complete/empty");
    gen->add_option("--p", gen_p, "first side of complete_bipartite");
    gen->add_option("--q", gen_q, "second side of complete_bipartite");
    gen->add_option("--m", gen_m, "leaf count for star");
    gen->add_option("--format", gen_format, "graph6 or edges");

    std::string solve_in, solve_param = "italian";
    bool solve_stdin = false, solve_json = false;
    auto* solve = app.add_subcommand("solve", "compute a domination parameter exactly");
    auto* solve_in_opt = solve->add_option("--in", solve_in, "input graph file");
    solve->add_flag("--stdin", solve_stdin, "read the graph from stdin (the default)")
        ->excludes(solve_in_opt);
    solve->add_option("--param", solve_param, "italian, roman or domination");
    solve->add_flag("--json", solve_json, "emit a JSON object");

    auto* op = app.add_subcommand("op", "apply a graph operator");
    op->require_subcommand(1);
    std::string corona_g, corona_h;
    auto* op_corona = op->add_subcommand("corona", "corona product G (.) H");
    op_corona->set_help_flag("--help", "print help");
    op_corona->add_option("--g", corona_g, "left operand file (default stdin)");
    op_corona->add_option("--h", corona_h, "right operand file, or K1")->required();
    std::string twin_in, twin_kind;
    int twin_vertex = -1;
    auto* op_twin = op->add_subcommand("twin", "add a twin of a vertex");
    op_twin->add_option("--in", twin_in, "input graph file (default stdin)");
    op_twin->add_option("--vertex", twin_vertex, "vertex to copy")->required();
    op_twin->add_option("--kind", twin_kind, "true or false")->required();

    int realize_n = 0, realize_a = 0;
    auto* realize = app.add_subcommand(
        "realize", "graph G with the requested pendant-corona Italian domination value");
    realize->add_option("--n", realize_n, "order of G")->required();
    realize->add_option("--a", realize_a, "target value, in [n+1, 2n]")->required();

    std::string enum_in;
    auto* enumerate = app.add_subcommand("enumerate", "list every minimum Italian labeling");
    enumerate->add_option("--in", enum_in, "input graph file (default stdin)");

    std::string verify_theorem;
    std::uint64_t verify_seed = 1;
    int verify_max_n = 0;
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify", "run the theorem verification suite");
    verify->add_option("--theorem", verify_theorem, "run a single check by id");
    verify->add_option("--seed", verify_seed, "random seed (default 1)");
    verify->add_option("--max-n", verify_max_n, "clamp every instance-size cap");
    verify->add_flag("--json", verify_json, "emit the JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        double budget = budget_from_env(60.0);
        if (gen->parsed()) return run_gen(gen_family, gen_n, gen_p, gen_q, gen_m, gen_format);
        if (solve->parsed()) return run_solve(solve_in, solve_param, solve_json, budget);
        if (op_corona->parsed()) return run_op_corona(corona_g, corona_h);
        if (op_twin->parsed()) return run_op_twin(twin_in, twin_vertex, twin_kind);
        if (realize->parsed()) return run_realize(realize_n, realize_a);
        if (enumerate->parsed()) return run_enumerate(enum_in);
        if (verify->parsed())
            return run_verify(verify_theorem, verify_seed, verify_max_n, verify_json, budget);
    } catch (const limit_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
