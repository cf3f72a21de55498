#include "rhot/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rhot/cliques.hpp"
#include "rhot/extremal.hpp"
#include "rhot/freeness.hpp"
#include "rhot/graph.hpp"
#include "rhot/jsonw.hpp"
#include "rhot/spectra.hpp"

namespace rhot {

namespace {

std::string trim_line(std::string line) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n' || line.back() == ' '))
        line.pop_back();
    return line;
}

Graph read_graph_arg(const std::string& arg, std::istream& in) {
    if (arg == "-") {
        std::string line;
        if (!std::getline(in, line))
            throw std::invalid_argument("no graph6 line on standard input");
        return from_graph6(trim_line(line));
    }
    return from_graph6(arg);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> toks;
    std::istringstream iss(s);
    std::string tok;
    while (iss >> tok) toks.push_back(tok);
    return toks;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> vals;
    std::string cur;
    std::istringstream iss(s);
    while (std::getline(iss, cur, ',')) {
        if (cur.empty()) throw std::invalid_argument("empty entry in integer list '" + s + "'");
        vals.push_back(std::stoi(cur));
    }
    if (vals.empty()) throw std::invalid_argument("empty integer list");
    return vals;
}

// turan N R | join-turan N K R | multipartite S1,S2,... | complete N
Graph build_from_spec(const std::vector<std::string>& toks) {
    if (toks.empty()) throw std::invalid_argument("empty construction spec");
    const std::string& kind = toks[0];
    auto want = [&](std::size_t n) {
        if (toks.size() != n + 1)
            throw std::invalid_argument("construction '" + kind + "' expects " + std::to_string(n) +
                                        " argument(s)");
    };
    if (kind == "turan") {
        want(2);
        return turan_graph(std::stoi(toks[1]), std::stoi(toks[2]));
    }
    if (kind == "join-turan") {
        want(3);
        return conjectured_extremal(std::stoi(toks[1]), std::stoi(toks[2]), std::stoi(toks[3]));
    }
    if (kind == "multipartite") {
        want(1);
        return complete_multipartite(parse_int_list(toks[1]));
    }
    if (kind == "complete") {
        want(1);
        return complete_graph(std::stoi(toks[1]));
    }
    throw std::invalid_argument("unknown construction '" + kind + "'");
}

void emit(const std::string& doc, const std::string& output_path, std::ostream& out) {
    if (output_path.empty()) {
        out << doc << "\n";
        return;
    }
    std::ofstream f(output_path);
    if (!f) throw std::invalid_argument("cannot open output file '" + output_path + "'");
    f << doc << "\n";
}

void write_vertex_list(JsonWriter& w, VertexSet set) {
    w.begin_array();
    while (set) {
        int v = std::countr_zero(set);
        set &= set - 1;
        w.value(v);
    }
    w.end_array();
}

std::string spectral_json(const Graph& g, int t, const SpectralResult& res) {
    JsonWriter w;
    w.begin_object();
    w.field("graph6", to_graph6(g));
    w.field("n", g.order());
    w.field("t", t);
    w.field("rho", res.rho);
    w.field("converged", res.converged);
    w.field("residual", res.residual);
    w.key("components");
    w.begin_array();
    for (const ComponentResult& cr : res.components) {
        w.begin_object();
        w.key("vertices");
        w.begin_array();
        for (int v : cr.vertices) w.value(v);
        w.end_array();
        w.field("rho", cr.rho);
        w.field("iterations", static_cast<std::int64_t>(cr.iterations));
        w.field("gap", cr.gap);
        w.field("converged", cr.converged);
        w.key("perron");
        w.begin_array();
        for (double v : cr.perron) w.value(v);
        w.end_array();
        w.end_object();
    }
    w.end_array();
    w.end_object();
    return w.str();
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open graph6 file '" + path + "'");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(f, line)) {
        line = trim_line(line);
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

void append_csv(const std::string& path, const ScanRecord& rec) {
    bool need_header = true;
    {
        std::ifstream probe(path);
        if (probe && probe.peek() != std::ifstream::traits_type::eof()) need_header = false;
    }
    std::ofstream f(path, std::ios::app);
    if (!f) throw std::invalid_argument("cannot open csv file '" + path + "'");
    if (need_header) f << scan_record_csv_header() << "\n";
    f << scan_record_csv_row(rec) << "\n";
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"t-clique spectral radius toolkit"};
    app.require_subcommand(1);

    std::string graph_arg, construct_spec, output_path, g6_file, csv_path, sizes_arg;
    int t = 2, k = 1, r = 1, all_n = -1, part_i = 0, part_j = 1, u = 0, v = 1, vn = 0, max_n = 6;
    double tol = 1e-10, shift = 1.0, tie_tol = 1e-9;
    long max_iters = 100000;
    int threads = 1;
    bool list_cliques = false, witness = false, no_prune = false;

    auto add_solver_flags = [&](CLI::App* cmd) {
        cmd->add_option("--tol", tol, "convergence tolerance on the eigenvalue bound gap");
        cmd->add_option("--max-iters", max_iters, "power iteration cap");
        cmd->add_option("--shift", shift, "diagonal shift");
    };

    CLI::App* rho_cmd = app.add_subcommand("rho", "compute rho_t of a graph");
    rho_cmd->add_option("graph6", graph_arg, "graph6 string, or - for stdin");
    rho_cmd->add_option("--construct", construct_spec,
                        "build the graph instead: 'turan N R' | 'join-turan N K R' | "
                        "'multipartite S1,S2,...' | 'complete N'");
    rho_cmd->add_option("--t", t, "clique order")->required();
    add_solver_flags(rho_cmd);
    rho_cmd->add_option("--output", output_path, "write JSON here instead of stdout");

    CLI::App* cliques_cmd = app.add_subcommand("cliques", "count or list t-cliques");
    cliques_cmd->add_option("graph6", graph_arg)->required();
    cliques_cmd->add_option("--t", t)->required();
    cliques_cmd->add_flag("--list", list_cliques, "include the cliques themselves");
    cliques_cmd->add_option("--output", output_path);

    CLI::App* free_cmd = app.add_subcommand("free", "test kK_{r+1}-freeness");
    free_cmd->add_option("graph6", graph_arg)->required();
    free_cmd->add_option("--k", k)->required();
    free_cmd->add_option("--r", r)->required();
    free_cmd->add_flag("--witness", witness, "include a disjoint packing when one exists");
    free_cmd->add_option("--output", output_path);

    CLI::App* construct_cmd = app.add_subcommand("construct", "emit a named graph as graph6");
    std::vector<std::string> construct_args;
    construct_cmd->add_option("spec", construct_args, "turan N R | join-turan N K R | multipartite S1,... | complete N")
        ->expected(-1);
    construct_cmd->add_option("--output", output_path);

    CLI::App* scan_cmd = app.add_subcommand("scan", "exhaustive rho_t maximizer scan over free graphs");
    scan_cmd->add_option("--all-n", all_n, "scan all labeled graphs on N vertices (N <= 7)");
    scan_cmd->add_option("--g6", g6_file, "scan a graph6 file, one graph per line");
    scan_cmd->add_option("--k", k)->required();
    scan_cmd->add_option("--r", r)->required();
    scan_cmd->add_option("--t", t)->required();
    add_solver_flags(scan_cmd);
    scan_cmd->add_option("--tie-tol", tie_tol, "rho tie tolerance for the maximizer set");
    scan_cmd->add_option("--threads", threads, "worker threads");
    scan_cmd->add_flag("--no-prune", no_prune, "disable upper-bound pruning");
    scan_cmd->add_option("--csv", csv_path, "append a one-line summary to this CSV file");
    scan_cmd->add_option("--output", output_path);

    CLI::App* verify_cmd = app.add_subcommand("verify", "check a structural property; exit 0 iff it holds");
    verify_cmd->require_subcommand(1);

    CLI::App* lb_cmd = verify_cmd->add_subcommand("lower-bound", "rho_t >= (t/n) c_t on the conjectured graph");
    lb_cmd->add_option("--n", vn)->required();
    lb_cmd->add_option("--k", k)->required();
    lb_cmd->add_option("--r", r)->required();
    lb_cmd->add_option("--t", t)->required();
    add_solver_flags(lb_cmd);
    lb_cmd->add_option("--output", output_path);

    CLI::App* bal_cmd = verify_cmd->add_subcommand("balancing", "moving a vertex between unbalanced parts raises rho_t");
    bal_cmd->add_option("--k", k)->required();
    bal_cmd->add_option("--t", t)->required();
    bal_cmd->add_option("--sizes", sizes_arg, "comma-separated part sizes")->required();
    bal_cmd->add_option("--i", part_i, "index of the larger part")->required();
    bal_cmd->add_option("--j", part_j, "index of the smaller part")->required();
    add_solver_flags(bal_cmd);
    bal_cmd->add_option("--output", output_path);

    CLI::App* mono_cmd = verify_cmd->add_subcommand("monotonicity", "adding an edge strictly raises rho_t");
    mono_cmd->add_option("graph6", graph_arg)->required();
    mono_cmd->add_option("--u", u)->required();
    mono_cmd->add_option("--v", v)->required();
    mono_cmd->add_option("--t", t)->required();
    add_solver_flags(mono_cmd);
    mono_cmd->add_option("--output", output_path);

    CLI::App* conn_cmd = verify_cmd->add_subcommand(
        "connectivity-equiv", "weak irreducibility equals t-clique connectivity, exhaustively");
    conn_cmd->add_option("--max-n", max_n, "check all graphs up to this order (<= 7)");
    conn_cmd->add_option("--output", output_path);

    std::vector<const char*> argv;
    argv.push_back("rhot");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (rho_cmd->parsed()) {
            if (graph_arg.empty() == construct_spec.empty())
                throw std::invalid_argument("rho: give exactly one of <graph6> or --construct");
            Graph g = construct_spec.empty() ? read_graph_arg(graph_arg, in)
                                             : build_from_spec(split_ws(construct_spec));
            if (t > g.order()) throw std::invalid_argument("rho: t exceeds the graph order");
            SpectralOptions sopts{tol, max_iters, shift, nullptr};
            SpectralResult res = spectral_radius(g, t, sopts);
            emit(spectral_json(g, t, res), output_path, out);
            return 0;
        }

        if (cliques_cmd->parsed()) {
            Graph g = read_graph_arg(graph_arg, in);
            CliqueSet cs = enumerate_cliques(g, t);
            JsonWriter w;
            w.begin_object();
            w.field("graph6", to_graph6(g));
            w.field("n", g.order());
            w.field("t", t);
            w.field("count", static_cast<std::uint64_t>(cs.count()));
            if (list_cliques) {
                w.key("cliques");
                w.begin_array();
                for (VertexSet c : cs.cliques) write_vertex_list(w, c);
                w.end_array();
            }
            w.end_object();
            emit(w.str(), output_path, out);
            return 0;
        }

        if (free_cmd->parsed()) {
            Graph g = read_graph_arg(graph_arg, in);
            auto packing = find_disjoint_packing(g, {k, r});
            JsonWriter w;
            w.begin_object();
            w.field("graph6", to_graph6(g));
            w.field("n", g.order());
            w.field("k", k);
            w.field("r", r);
            w.field("free", !packing.has_value());
            if (witness && packing) {
                w.key("packing");
                w.begin_array();
                for (VertexSet c : packing->cliques) write_vertex_list(w, c);
                w.end_array();
            }
            w.end_object();
            emit(w.str(), output_path, out);
            return 0;
        }

        if (construct_cmd->parsed()) {
            Graph g = build_from_spec(construct_args);
            emit(to_graph6(g), output_path, out);
            return 0;
        }

        if (scan_cmd->parsed()) {
            if ((all_n >= 0) == !g6_file.empty())
                throw std::invalid_argument("scan: give exactly one of --all-n or --g6");
            Population pop = [&] {
                if (all_n >= 0) return Population::all_graphs(all_n);
                std::vector<std::string> lines = read_lines(g6_file);
                if (lines.empty()) throw std::invalid_argument("scan: empty graph6 file");
                int file_n = from_graph6(lines[0]).order();
                return Population::from_graph6_lines(lines, file_n, "g6:" + g6_file);
            }();
            ScanOptions opts;
            opts.tol = tol;
            opts.max_iters = max_iters;
            opts.shift = shift;
            opts.tie_tol = tie_tol;
            opts.threads = threads;
            opts.prune = !no_prune;
            ScanRecord rec = scan(pop, k, r, t, opts);
            if (!csv_path.empty()) append_csv(csv_path, rec);
            emit(scan_record_json(rec), output_path, out);
            return 0;
        }

        if (lb_cmd->parsed()) {
            SpectralOptions sopts{tol, max_iters, shift, nullptr};
            LowerBoundReport rep = check_lower_bound(vn, k, r, t, sopts);
            JsonWriter w;
            w.begin_object();
            w.field("check", "lower-bound");
            w.field("n", vn);
            w.field("k", k);
            w.field("r", r);
            w.field("t", t);
            w.field("rho", rep.rho);
            w.field("bound", rep.bound);
            w.field("pass", rep.holds);
            w.end_object();
            emit(w.str(), output_path, out);
            return rep.holds ? 0 : 1;
        }

        if (bal_cmd->parsed()) {
            std::vector<int> sizes = parse_int_list(sizes_arg);
            SpectralOptions sopts{tol, max_iters, shift, nullptr};
            BalancingReport rep = verify_balancing(k, t, sizes, part_i, part_j, sopts);
            JsonWriter w;
            w.begin_object();
            w.field("check", "balancing");
            w.field("k", k);
            w.field("t", t);
            w.key("sizes");
            w.begin_array();
            for (int s : sizes) w.value(s);
            w.end_array();
            w.field("i", part_i);
            w.field("j", part_j);
            w.field("rho_before", rep.rho_before);
            w.field("rho_after", rep.rho_after);
            w.field("margin", rep.rho_after - rep.rho_before);
            w.field("pass", rep.increased);
            w.end_object();
            emit(w.str(), output_path, out);
            return rep.increased ? 0 : 1;
        }

        if (mono_cmd->parsed()) {
            Graph g = read_graph_arg(graph_arg, in);
            SpectralOptions sopts{tol, max_iters, shift, nullptr};
            MonotonicityReport rep = verify_monotonicity(g, u, v, t, sopts);
            JsonWriter w;
            w.begin_object();
            w.field("check", "monotonicity");
            w.field("graph6", to_graph6(g));
            w.field("u", u);
            w.field("v", v);
            w.field("t", t);
            w.field("applicable", rep.applicable);
            if (rep.applicable) {
                w.field("rho_before", rep.rho_before);
                w.field("rho_after", rep.rho_after);
                w.field("strict", rep.strict);
            }
            w.field("pass", rep.applicable && rep.strict);
            w.end_object();
            emit(w.str(), output_path, out);
            return (rep.applicable && rep.strict) ? 0 : 1;
        }

        if (conn_cmd->parsed()) {
            if (max_n < 0 || max_n > 7)
                throw std::invalid_argument("connectivity-equiv: --max-n must be between 0 and 7");
            std::uint64_t checked = 0, mismatches = 0;
            for (int n = 2; n <= max_n; ++n) {
                std::uint64_t total = labeled_graph_count(n);
                for (std::uint64_t mask = 0; mask < total; ++mask) {
                    Graph g = graph_from_edge_mask(n, mask);
                    for (int tt = 2; tt <= n; ++tt) {
                        ++checked;
                        if (weakly_irreducible(g, tt) != clique_connected(g, tt)) ++mismatches;
                    }
                }
            }
            JsonWriter w;
            w.begin_object();
            w.field("check", "connectivity-equiv");
            w.field("max_n", max_n);
            w.field("checked", checked);
            w.field("mismatches", mismatches);
            w.field("pass", mismatches == 0);
            w.end_object();
            emit(w.str(), output_path, out);
            return mismatches == 0 ? 0 : 1;
        }
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace rhot
