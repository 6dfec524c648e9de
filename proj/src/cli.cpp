#include "codim/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "codim/codim_dp.hpp"
#include "codim/cotree.hpp"
#include "codim/digraph.hpp"
#include "codim/errors.hpp"
#include "codim/hardness.hpp"
#include "codim/resolve.hpp"

namespace codim {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Vertex> labels_to_vertices(const Digraph& g,
                                       const std::vector<std::string>& labels) {
    std::vector<Vertex> out;
    for (const auto& name : labels) {
        auto v = g.find_vertex(name);
        if (!v)
            throw ParseError("unknown vertex label: " + name);
        out.push_back(*v);
    }
    return out;
}

std::string join_labels(const Digraph& g, const std::vector<Vertex>& set) {
    std::string line;
    for (Vertex v : set) {
        if (!line.empty())
            line += ' ';
        line += g.label(v);
    }
    return line;
}

void cmd_solve(const std::string& file, std::ostream& out) {
    CographSolution sol = min_resolving_set_cograph(parse_cotree_document(read_file(file)));
    out << "size " << sol.size << "\n";
    out << "type " << state_type_name(sol.type) << "\n";
    std::string line;
    for (const auto& name : sol.set_labels) {
        if (!line.empty())
            line += ' ';
        line += name;
    }
    out << line << "\n";
}

void cmd_brute(const std::string& file, int max_n, std::ostream& out) {
    Digraph g = from_edge_list(read_file(file));
    auto set = min_resolving_set_bruteforce(g, max_n);
    out << "size " << set.size() << "\n";
    out << join_labels(g, set) << "\n";
}

void cmd_check(const std::string& file, const std::vector<std::string>& labels,
               std::ostream& out) {
    Digraph g = from_edge_list(read_file(file));
    auto r = labels_to_vertices(g, labels);
    auto witness = first_unresolved_pair(distance_table(g), r);
    if (!witness) {
        out << "resolving\n";
    } else {
        out << "not resolving\n";
        out << "witness " << g.label(witness->first) << " " << g.label(witness->second)
            << "\n";
    }
}

void cmd_classify(const std::string& file, const std::vector<std::string>& labels,
                  std::ostream& out) {
    Digraph g = from_edge_list(read_file(file));
    auto r = labels_to_vertices(g, labels);
    std::vector<char> in_r(g.vertex_count(), 0);
    for (Vertex v : r)
        in_r[v] = 1;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (in_r[v])
            continue;
        const char* name = "neither";
        switch (classify_vertex(g, r, v)) {
        case VertexClass::One: name = "one"; break;
        case VertexClass::Two: name = "two"; break;
        case VertexClass::Neither: name = "neither"; break;
        }
        out << g.label(v) << " " << name << "\n";
    }
}

void cmd_reduce(const std::string& file, bool dot, const std::string& roles_path,
                std::ostream& out) {
    HittingSetInstance inst = normalize_instance(parse_hitting_set(read_file(file)));
    ReductionResult red = reduce(inst);
    if (dot) {
        out << to_dot(red.graph);
    } else {
        out << to_edge_list(red.graph);
        out << "# roles\n";
        for (Vertex v = 0; v < red.graph.vertex_count(); ++v)
            out << "# " << red.graph.label(v) << " " << role_name(red.roles[v]) << "\n";
    }
    if (!roles_path.empty()) {
        std::ofstream sidecar(roles_path);
        if (!sidecar)
            throw ParseError("cannot write roles file: " + roles_path);
        for (Vertex v = 0; v < red.graph.vertex_count(); ++v)
            sidecar << red.graph.label(v) << " " << role_name(red.roles[v]) << "\n";
    }
}

void cmd_gen(std::uint64_t seed, int leaves, bool join_root, std::ostream& out) {
    out << to_expression(random_cotree(seed, leaves, join_root)) << "\n";
}

void cmd_materialize(const std::string& file, bool dot, std::ostream& out) {
    Materialized mat = materialize(parse_cotree_document(read_file(file)));
    out << (dot ? to_dot(mat.graph) : to_edge_list(mat.graph));
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"minimum resolving sets for digraphs and directed co-graphs"};
    app.require_subcommand(1);

    std::string file;
    std::vector<std::string> set_labels;
    int max_n = 20;
    bool dot = false;
    std::string roles_path;
    std::uint64_t seed = 1;
    int leaves = 1;
    bool join_root = false;

    auto* solve = app.add_subcommand("solve", "minimum resolving set of a co-tree file");
    solve->add_option("file", file)->required();

    auto* brute = app.add_subcommand("brute", "exact minimum resolving set of an edge list");
    brute->add_option("file", file)->required();
    brute->add_option("--max-n", max_n, "vertex-count guard");

    auto* check = app.add_subcommand("check", "validate a resolving set");
    check->add_option("file", file)->required();
    check->add_option("set", set_labels, "vertex labels")->required();

    auto* classify = app.add_subcommand("classify", "1-vertex/2-vertex report");
    classify->add_option("file", file)->required();
    classify->add_option("--set", set_labels, "vertex labels")->required();

    auto* red = app.add_subcommand("reduce", "hitting-set to DAG reduction");
    red->add_option("file", file)->required();
    red->add_flag("--dot", dot, "emit DOT instead of an edge list");
    red->add_option("--roles", roles_path, "write a 'vertex role' sidecar file");

    auto* gen = app.add_subcommand("gen", "seeded random co-tree expression");
    gen->add_option("--seed", seed)->required();
    gen->add_option("--leaves", leaves)->required();
    gen->add_flag("--join-root", join_root);

    auto* mat = app.add_subcommand("materialize", "explicit edge list of a co-tree");
    mat->add_option("file", file)->required();
    mat->add_flag("--dot", dot, "emit DOT instead of an edge list");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed); // CLI11 consumes arguments back to front
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*solve)
            cmd_solve(file, out);
        else if (*brute)
            cmd_brute(file, max_n, out);
        else if (*check)
            cmd_check(file, set_labels, out);
        else if (*classify)
            cmd_classify(file, set_labels, out);
        else if (*red)
            cmd_reduce(file, dot, roles_path, out);
        else if (*gen)
            cmd_gen(seed, leaves, join_root, out);
        else if (*mat)
            cmd_materialize(file, dot, out);
        return 0;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace codim
