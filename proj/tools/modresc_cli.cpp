#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "modresc/bigraph.hpp"
#include "modresc/boolmat.hpp"
#include "modresc/bridge.hpp"
#include "modresc/enumerate.hpp"
#include "modresc/errors.hpp"
#include "modresc/kernel.hpp"
#include "modresc/solve.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace modresc;

// 0 = success, 1 = negative answer (infeasible under --max-k, verification
// mismatch, kernel budget rejection), 2 = unreadable or malformed input.
constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_bad_input = 2;
constexpr int exit_internal = 70; // a broken invariant, never an input problem

BoolMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error(path + ": cannot open");
    return parse_matrix(in, path);
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error(path + ": cannot open");
    try {
        return json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(path + ": " + e.what());
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw input_error(path + ": cannot open for writing");
    out << text;
    out.flush();
    if (!out) throw input_error(path + ": write failed");
}

std::string join(const std::vector<std::size_t>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

json matrix_rows(const BoolMatrix& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a.get(i, j) ? 1 : 0);
        rows.push_back(std::move(row));
    }
    return rows;
}

BoolMatrix matrix_from_json(const json& rows, const std::string& what) {
    if (!rows.is_array()) throw input_error(what + ": expected an array of rows");
    std::size_t n = rows.size();
    std::size_t m = n && rows[0].is_array() ? rows[0].size() : 0;
    BoolMatrix a(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = rows[i];
        if (!row.is_array() || row.size() != m)
            throw input_error(what + ": row " + std::to_string(i) + " is not an array of " +
                              std::to_string(m) + " entries");
        for (std::size_t j = 0; j < m; ++j) {
            const json& cell = row[j];
            if (!cell.is_number_integer() || (cell != 0 && cell != 1))
                throw input_error(what + ": entry (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") is not 0 or 1");
            if (cell == 1) a.set(i, j, true);
        }
    }
    return a;
}

json cover_rows(const BicliqueCover& cover) {
    json out = json::array();
    for (const Biclique& b : cover)
        out.push_back(json{{"rows", b.left.indices()}, {"cols", b.right.indices()}});
    return out;
}

json solution_report(const BoolMatrix& c, const CoverSolution& sol, bool deterministic) {
    json rep;
    rep["n"] = c.rows();
    rep["m"] = c.cols();
    rep["k"] = sol.k;
    rep["M"] = matrix_rows(sol.pair.M);
    rep["R"] = matrix_rows(sol.pair.R);
    rep["bicliques"] = cover_rows(sol.cover);
    rep["stats"] = json{{"nodes", sol.stats.nodes},
                        {"kernel_offset", sol.stats.kernel_offset},
                        {"ms", deterministic ? 0.0 : sol.stats.wall_ms}};
    return rep;
}

std::string solution_text(const BoolMatrix& c, const CoverSolution& sol, bool deterministic) {
    std::ostringstream out;
    out << "n=" << c.rows() << " m=" << c.cols() << " k=" << sol.k << "\n";
    for (std::size_t i = 0; i < sol.cover.size(); ++i)
        out << "biclique " << i << ": rows=" << join(sol.cover[i].left.indices())
            << " cols=" << join(sol.cover[i].right.indices()) << "\n";
    out << "M:\n" << to_text(sol.pair.M) << "R:\n" << to_text(sol.pair.R);
    out << "stats: nodes=" << sol.stats.nodes << " kernel_offset=" << sol.stats.kernel_offset
        << " ms=" << (deterministic ? 0.0 : sol.stats.wall_ms) << "\n";
    return out.str();
}

// Bipartite rendering of the cover: row and column nodes in two ranks, one
// edge per 1-entry, labeled with the ids of the bicliques covering it.
std::string cover_dot(const BoolMatrix& c, const BicliqueCover& cover) {
    std::ostringstream out;
    out << "graph cover {\n  rankdir=LR;\n";
    out << "  subgraph cluster_rows {\n    label=\"rows\";\n";
    for (std::size_t i = 0; i < c.rows(); ++i) out << "    r" << i << ";\n";
    out << "  }\n  subgraph cluster_cols {\n    label=\"cols\";\n";
    for (std::size_t j = 0; j < c.cols(); ++j) out << "    c" << j << ";\n";
    out << "  }\n";
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) {
            if (!c.get(i, j)) continue;
            std::vector<std::size_t> ids;
            for (std::size_t l = 0; l < cover.size(); ++l)
                if (cover[l].left.test(i) && cover[l].right.test(j)) ids.push_back(l);
            out << "  r" << i << " -- c" << j << " [label=\"" << join(ids) << "\"];\n";
        }
    out << "}\n";
    return out.str();
}

int cmd_solve(const std::string& matrix_path, const SolverConfig& config,
              const std::string& format, const std::string& dot_path) {
    BoolMatrix c = load_matrix(matrix_path);
    CoverSolution sol = solve_modresc(c, config);
    if (!sol.feasible) {
        std::cerr << "infeasible: no factorization of width <= "
                  << (config.max_k ? std::to_string(*config.max_k) : std::string("?")) << "\n";
        return exit_negative;
    }
    if (!dot_path.empty()) write_file(dot_path, cover_dot(c, sol.cover));
    if (format == "json")
        std::cout << solution_report(c, sol, config.deterministic).dump(2) << "\n";
    else
        std::cout << solution_text(c, sol, config.deterministic);
    return exit_ok;
}

int cmd_verify(const std::string& matrix_path, const std::vector<std::string>& solution_paths) {
    BoolMatrix c = load_matrix(matrix_path);
    BoolMatrix m, r;
    if (solution_paths.size() == 1) {
        json sol = load_json(solution_paths[0]);
        if (!sol.is_object() || !sol.contains("M") || !sol.contains("R"))
            throw input_error(solution_paths[0] + ": expected an object with \"M\" and \"R\"");
        m = matrix_from_json(sol["M"], solution_paths[0] + ": M");
        r = matrix_from_json(sol["R"], solution_paths[0] + ": R");
    } else {
        m = load_matrix(solution_paths[0]);
        r = load_matrix(solution_paths[1]);
    }
    if (m.rows() != c.rows())
        throw input_error("M has " + std::to_string(m.rows()) + " rows, C has " +
                          std::to_string(c.rows()));
    if (r.rows() != c.cols())
        throw input_error("R has " + std::to_string(r.rows()) + " rows, C has " +
                          std::to_string(c.cols()) + " columns");
    if (m.cols() != r.cols())
        throw input_error("M has " + std::to_string(m.cols()) + " columns, R has " +
                          std::to_string(r.cols()));
    BoolMatrix product = mat_otimes(m, r);
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j)
            if (product.get(i, j) != c.get(i, j)) {
                std::cerr << "mismatch at row " << i << ", column " << j << ": product has "
                          << product.get(i, j) << ", matrix has " << c.get(i, j) << "\n";
                return exit_negative;
            }
    return exit_ok;
}

int cmd_kernelize(const std::string& matrix_path, long long max_k, const std::string& format) {
    BoolMatrix c = load_matrix(matrix_path);
    std::optional<std::size_t> budget;
    if (max_k >= 0) budget = static_cast<std::size_t>(max_k);
    KernelResult kr = kernelize(from_biadjacency(c), budget);
    bool rejected = kr.verdict == KernelVerdict::RejectedBySizeBound;
    BoolMatrix kernel = to_biadjacency(kr.kernel);
    if (format == "json") {
        json rep;
        rep["verdict"] = rejected ? "rejected" : "reduced";
        rep["offset"] = kr.parameter_offset;
        rep["rows_kept"] = kr.left_ids;
        rep["cols_kept"] = kr.right_ids;
        rep["kernel"] = matrix_rows(kernel);
        std::cout << rep.dump(2) << "\n";
    } else {
        std::cout << "verdict=" << (rejected ? "rejected" : "reduced")
                  << " offset=" << kr.parameter_offset << " rows=" << kernel.rows()
                  << " cols=" << kernel.cols() << "\n";
        std::cout << "rows_kept=" << join(kr.left_ids) << "\n";
        std::cout << "cols_kept=" << join(kr.right_ids) << "\n";
        if (kernel.rows() && kernel.cols()) std::cout << to_text(kernel);
    }
    return rejected ? exit_negative : exit_ok;
}

int cmd_enumerate(const std::string& matrix_path, const std::string& format) {
    BoolMatrix c = load_matrix(matrix_path);
    std::vector<Biclique> all = maximal_bicliques(from_biadjacency(c));
    if (format == "json") {
        json rep;
        rep["count"] = all.size();
        rep["bicliques"] = cover_rows(all);
        std::cout << rep.dump(2) << "\n";
    } else {
        for (const Biclique& b : all)
            std::cout << "rows=" << join(b.left.indices()) << " cols=" << join(b.right.indices())
                      << "\n";
    }
    return exit_ok;
}

int cmd_transform(const std::string& matrix_path, const std::string& format) {
    BoolMatrix c = load_matrix(matrix_path);
    GeneralGraph g = saturate(from_biadjacency(c));
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < g.vertex_count; ++u)
        for (std::size_t v = u + 1; v < g.vertex_count; ++v)
            if (g.has_edge(u, v)) edges.emplace_back(u, v);
    if (format == "json") {
        json rep;
        rep["vertices"] = g.vertex_count;
        rep["rows"] = c.rows();
        rep["cols"] = c.cols();
        json es = json::array();
        for (auto [u, v] : edges) es.push_back(json::array({u, v}));
        rep["edges"] = std::move(es);
        std::cout << rep.dump(2) << "\n";
    } else {
        std::cout << "# vertices=" << g.vertex_count << " rows=" << c.rows()
                  << " cols=" << c.cols() << " edges=" << edges.size() << "\n";
        for (auto [u, v] : edges) std::cout << u << " " << v << "\n";
    }
    return exit_ok;
}

int cmd_generate(std::size_t n, std::size_t m, std::size_t k_star, double left_density,
                 double right_density, std::uint64_t seed, const std::string& prefix,
                 const std::string& format) {
    PlantedInstance inst = generate_planted(n, m, k_star, left_density, right_density, seed);
    std::string c_path = prefix + ".C.txt";
    std::string m_path = prefix + ".M.txt";
    std::string r_path = prefix + ".R.txt";
    write_file(c_path, to_text(inst.C));
    write_file(m_path, to_text(inst.pair.M));
    write_file(r_path, to_text(inst.pair.R));
    if (format == "json") {
        json rep;
        rep["seed"] = seed;
        rep["n"] = n;
        rep["m"] = m;
        rep["planted_k"] = k_star;
        rep["files"] = json{{"C", c_path}, {"M", m_path}, {"R", r_path}};
        std::cout << rep.dump(2) << "\n";
    } else {
        std::cout << "seed=" << seed << " n=" << n << " m=" << m << " planted_k=" << k_star
                  << "\n";
        std::cout << "C=" << c_path << " M=" << m_path << " R=" << r_path << "\n";
    }
    return exit_ok;
}

Algorithm algorithm_from_name(const std::string& name) {
    if (name == "partition") return Algorithm::partition;
    if (name == "subsets") return Algorithm::subsets;
    return Algorithm::branch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact minimum-width boolean factorization C = M (x) R, solved as"
                 " bipartite biclique edge cover"};
    app.require_subcommand(1);

    std::string matrix_path, format, dot_path, algorithm = "branch", prefix = "planted";
    std::vector<std::string> solution_paths;
    long long max_k = -1;
    std::uint64_t seed = 0;
    bool deterministic = true;
    std::size_t gen_n = 10, gen_m = 10, gen_k = 3;
    double left_density = 0.5, right_density = 0.5;

    CLI::App* solve = app.add_subcommand("solve", "minimize k for a 0/1 matrix file");
    solve->add_option("matrix", matrix_path, "matrix text file")->required();
    solve->add_option("--algorithm", algorithm, "search algorithm")
        ->check(CLI::IsMember({"partition", "subsets", "branch"}));
    solve->add_option("--max-k", max_k, "give up beyond this width (exit 1)");
    solve->add_option("--seed", seed, "random seed echoed into the run");
    solve->add_flag("--deterministic,!--no-deterministic", deterministic,
                    "byte-stable output: report ms as 0 (default on)");
    solve->add_option("--format", format, "json or text (default json)")
        ->check(CLI::IsMember({"json", "text"}));
    solve->add_option("--dot", dot_path, "also write the cover as a DOT graph file");

    CLI::App* verify = app.add_subcommand(
        "verify", "check M (x) R = C; pass a solve report (JSON) or M and R matrix files");
    verify->add_option("matrix", matrix_path, "matrix text file")->required();
    verify->add_option("solution", solution_paths, "solution.json, or M.txt R.txt")
        ->expected(1, 2)
        ->required();

    CLI::App* kern = app.add_subcommand("kernelize", "reduce a matrix, report kernel and offset");
    kern->add_option("matrix", matrix_path, "matrix text file")->required();
    kern->add_option("--max-k", max_k, "reject kernels exceeding the width budget (exit 1)");
    kern->add_option("--format", format, "json or text (default text)")
        ->check(CLI::IsMember({"json", "text"}));

    CLI::App* enumerate = app.add_subcommand("enumerate", "list all maximal bicliques");
    enumerate->add_option("matrix", matrix_path, "matrix text file")->required();
    enumerate->add_option("--format", format, "json or text (default text)")
        ->check(CLI::IsMember({"json", "text"}));

    CLI::App* transform = app.add_subcommand(
        "transform", "emit the saturated graph (both vertex classes completed) as an edge list");
    transform->add_option("matrix", matrix_path, "matrix text file")->required();
    transform->add_option("--format", format, "json or text (default text)")
        ->check(CLI::IsMember({"json", "text"}));

    CLI::App* generate = app.add_subcommand("generate", "write a planted instance C, M, R");
    generate->add_option("--rows", gen_n, "rows of C")->check(CLI::PositiveNumber);
    generate->add_option("--cols", gen_m, "columns of C")->check(CLI::PositiveNumber);
    generate->add_option("--planted-k", gen_k, "width of the planted factorization");
    generate->add_option("--left-density", left_density, "P(M entry = 1)");
    generate->add_option("--right-density", right_density, "P(R entry = 0)");
    generate->add_option("--seed", seed, "random seed");
    generate->add_option("--out-prefix", prefix, "output files PREFIX.{C,M,R}.txt");
    generate->add_option("--format", format, "json or text (default json)")
        ->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_bad_input;
    }

    try {
        if (solve->parsed()) {
            SolverConfig config;
            config.algorithm = algorithm_from_name(algorithm);
            if (max_k >= 0) config.max_k = static_cast<std::size_t>(max_k);
            config.seed = seed;
            config.deterministic = deterministic;
            return cmd_solve(matrix_path, config, format.empty() ? "json" : format, dot_path);
        }
        if (verify->parsed()) return cmd_verify(matrix_path, solution_paths);
        if (kern->parsed())
            return cmd_kernelize(matrix_path, max_k, format.empty() ? "text" : format);
        if (enumerate->parsed())
            return cmd_enumerate(matrix_path, format.empty() ? "text" : format);
        if (transform->parsed())
            return cmd_transform(matrix_path, format.empty() ? "text" : format);
        if (generate->parsed())
            return cmd_generate(gen_n, gen_m, gen_k, left_density, right_density, seed, prefix,
                                format.empty() ? "json" : format);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_bad_input;
}
