#include "CLI11.hpp"

#include "taufan/error.hpp"
#include "taufan/suites.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace taufan;

namespace {

constexpr int kExitInconsistent = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 64;

struct Settings {
    std::string algebra;
    int max_nodes = 512;
    int max_depth = 64;
    int max_module_dim = 16;
    std::string bound;
    int kronecker_depth = 8;
    int max_dim = 1;
    std::string dot;
    bool labels = false;
    std::string pair;
    std::string module;
    std::string vector;
    std::string out;
    std::string project;
};

std::vector<Scalar> parse_list(const std::string& text, const std::string& what)
{
    std::vector<Scalar> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t()");
        auto e = item.find_last_not_of(" \t()");
        if (b == std::string::npos)
            throw usage_error("cli", what + " has an empty entry: '" + text + "'");
        item = item.substr(b, e - b + 1);
        try {
            out.emplace_back(item, 10);
            out.back().canonicalize();
        } catch (const std::invalid_argument&) {
            throw usage_error("cli", what + " entry '" + item + "' is not a rational number");
        }
    }
    if (out.empty())
        throw usage_error("cli", what + " is empty");
    return out;
}

IntVec parse_int_list(const std::string& text, const std::string& what)
{
    IntVec out;
    for (const auto& s : parse_list(text, what)) {
        if (s.get_den() != 1 || !s.get_num().fits_sint_p())
            throw usage_error("cli", what + " must contain integers");
        out.push_back(static_cast<int>(s.get_num().get_si()));
    }
    return out;
}

std::string yes(bool b)
{
    return b ? "yes" : "no";
}

void write_output(const std::string& path, const std::string& text)
{
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw usage_error("cli", "cannot write " + path);
    f << text;
}

Engine make_engine(const Settings& s)
{
    EngineOptions opts;
    opts.limits.max_nodes = s.max_nodes;
    opts.limits.max_depth = s.max_depth;
    opts.limits.max_module_dim = s.max_module_dim;
    opts.kronecker_depth = s.kronecker_depth;
    AlgebraPtr alg = load_algebra(s.algebra);
    if (!s.bound.empty()) {
        IntVec b = parse_int_list(s.bound, "--bound");
        if (static_cast<int>(b.size()) != alg->vertex_count())
            throw usage_error("cli", "--bound needs one entry per vertex");
        opts.bound = b;
    }
    return Engine(alg, opts);
}

void print_graph_status(const MutationGraph& g)
{
    std::cout << "complete: " << yes(g.complete) << "\n";
    std::cout << "cap: " << (g.complete ? "none" : g.cap) << "\n";
    if (!g.complete)
        std::cout << "infinite_suspected: yes\n";
}

int graph_exit(const MutationGraph& g)
{
    return g.complete ? 0 : kExitBudget;
}

int cmd_check(const Settings& s)
{
    AlgebraPtr alg = load_algebra(s.algebra);
    std::cout << "algebra: " << s.algebra << "\n"
              << "field: " << alg->field().name() << "\n"
              << "vertices: " << alg->vertex_count() << "\n"
              << "arrows: " << alg->arrow_count() << "\n"
              << "relations: " << alg->relations().size() << "\n"
              << "dimension: " << alg->dimension() << "\n"
              << "status: ok\n";
    return 0;
}

int cmd_indec(const Settings& s)
{
    AlgebraPtr alg = load_algebra(s.algebra);
    if (s.max_dim < 0)
        throw usage_error("cli", "--max-dim must be nonnegative");
    IntVec bound(alg->vertex_count(), s.max_dim);
    auto cat = enumerate_indecomposables(alg, bound);
    std::cout << "bound: " << vector_string(bound) << "\n";
    std::cout << "indecomposables: " << cat.size() << "\n";
    for (const auto& e : cat.entries()) {
        Representation t = ar_translate(e.module);
        bool rigid = t.is_zero() || hom_dim(e.module, t) == 0;
        std::cout << "INDEC " << e.id << " dim=" << vector_string(e.module.dims()) << " brick=" << yes(is_brick(e.module))
                  << " tau_rigid=" << yes(rigid) << "\n";
    }
    return 0;
}

int cmd_pairs(const Settings& s)
{
    Engine e = make_engine(s);
    const auto& g = e.graph();
    auto& reg = e.registry();
    std::cout << "pairs: " << g.nodes.size() << "\n";
    print_graph_status(g);
    for (size_t i = 0; i < g.nodes.size(); ++i)
        std::cout << "PAIR " << i << " " << pair_string(reg, g.nodes[i]) << " key=" << key_string(pair_key(reg, g.nodes[i]))
                  << " depth=" << g.depth[i] << "\n";
    return graph_exit(g);
}

int cmd_mutation_graph(const Settings& s)
{
    Engine e = make_engine(s);
    const auto& g = e.graph();
    std::string dot = e.mutation_dot(s.labels);
    write_output(s.dot, dot);
    std::ostream& os = s.dot == "-" ? std::cerr : std::cout;
    os << "nodes: " << g.nodes.size() << "\n" << "edges: " << g.edges.size() << "\n";
    os << "complete: " << yes(g.complete) << "\n";
    return graph_exit(g);
}

int cmd_hasse(const Settings& s)
{
    Engine e = make_engine(s);
    const auto& g = e.graph();
    HassePoset h = hasse(e.registry(), g);
    write_output(s.dot, e.hasse_dot());
    std::ostream& os = s.dot == "-" ? std::cerr : std::cout;
    os << "nodes: " << h.nodes.size() << "\n" << "covers: " << h.covers.size() << "\n";
    if (h.top >= 0)
        os << "top: " << pair_string(e.registry(), h.nodes[h.top]) << "\n";
    if (h.bottom >= 0)
        os << "bottom: " << pair_string(e.registry(), h.nodes[h.bottom]) << "\n";
    return graph_exit(g);
}

std::vector<int> selected_nodes(Engine& e, const std::string& want)
{
    const auto& g = e.graph();
    auto& reg = e.registry();
    std::vector<int> out;
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        if (!want.empty() && want != std::to_string(i) && want != pair_string(reg, g.nodes[i]) &&
            want != key_string(pair_key(reg, g.nodes[i])))
            continue;
        out.push_back(static_cast<int>(i));
    }
    if (!want.empty() && out.empty())
        throw usage_error("cli", "no pair matches '" + want + "'");
    return out;
}

int cmd_matrix(const Settings& s, bool c_matrices)
{
    Engine e = make_engine(s);
    auto& reg = e.registry();
    const auto& g = e.graph();
    for (int i : selected_nodes(e, s.pair)) {
        std::cout << "pair: " << pair_string(reg, g.nodes[i]) << "\n";
        std::cout << "key: " << key_string(pair_key(reg, g.nodes[i])) << "\n";
        if (c_matrices)
            std::cout << "c_matrix: " << c_matrix(reg, g.nodes[i]).str() << "\n";
        else
            std::cout << "g_matrix: " << g_matrix(reg, g.nodes[i]).str() << "\n";
        std::cout << "\n";
    }
    print_graph_status(g);
    return graph_exit(g);
}

std::string vectors_string(const VCone& c)
{
    std::string s = "[";
    bool first = true;
    for (const auto& l : c.lineality) {
        s += (first ? "" : ",") + std::string("+-") + vector_string(l);
        first = false;
    }
    for (const auto& r : c.rays) {
        s += (first ? "" : ",") + vector_string(r);
        first = false;
    }
    return s + "]";
}

int cmd_walls(const Settings& s)
{
    Engine e = make_engine(s);
    if (e.kronecker()) {
        auto walls = kronecker_walls(s.kronecker_depth);
        std::cout << "walls: " << walls.size() << "\n";
        std::cout << "source: closed forms to depth " << s.kronecker_depth << "\n";
        for (const auto& w : walls) {
            std::cout << "WALL " << w.name << " dim=" << vector_string(w.dims)
                      << " eq=" << vector_string(to_int_vector(primitive(to_qvec(w.dims))))
                      << " ineqs=" << (w.line ? 0 : 1) << " generators=[" << (w.line ? "+-" : "")
                      << vector_string(w.direction) << "]" << (w.limit ? " limit=yes" : "") << "\n";
        }
        return 0;
    }
    const auto& cat = e.catalog();
    const auto& walls = e.walls();
    std::cout << "walls: " << walls.size() << "\n";
    for (const auto& w : walls) {
        HCone h = constraints_of(w.generators);
        std::string eq = h.equalities.empty() ? "()" : vector_string(h.equalities[0]);
        std::cout << "WALL " << cat[w.module].id << " dim=" << vector_string(cat[w.module].module.dims()) << " eq=" << eq
                  << " ineqs=" << h.inequalities.size() << " generators=" << vectors_string(w.generators) << "\n";
    }
    return graph_exit(e.graph());
}

int cmd_chambers(const Settings& s)
{
    Engine e = make_engine(s);
    auto& reg = e.registry();
    auto list = e.chamber_list();
    std::cout << "chambers: " << list.size() << "\n";
    print_graph_status(e.graph());
    for (const auto& c : list)
        std::cout << "CHAMBER " << key_string(pair_key(reg, c.pair)) << " generators=" << vectors_string(c.cone) << "\n";
    return graph_exit(e.graph());
}

int cmd_stability(const Settings& s)
{
    AlgebraPtr alg = load_algebra(s.algebra);
    std::string name;
    Representation m = load_module(s.module, alg, &name);
    QVec v = parse_list(s.vector, "--vector");
    if (static_cast<int>(v.size()) != alg->vertex_count())
        throw usage_error("cli", "--vector needs one entry per vertex");
    bool ss = is_semistable(m, v);
    bool st = ss && is_stable(m, v);
    std::cout << "module: " << (name.empty() ? loewy_name(m) : name) << "\n"
              << "dims: " << vector_string(m.dims()) << "\n"
              << "vector: " << vector_string(v) << "\n"
              << "pairing: " << pairing(*alg, v, m.dims()).get_str() << "\n"
              << "semistable: " << yes(ss) << "\n"
              << "stable: " << yes(st) << "\n";
    if (ss && alg->field().is_prime()) {
        auto f = stable_filtration(m, v);
        std::string factors;
        for (size_t i = 0; i < f.factor_dims.size(); ++i)
            factors += (i ? ";" : "") + vector_string(f.factor_dims[i]);
        std::cout << "filtration: " << factors << "\n";
    }
    return 0;
}

int cmd_table(const Settings& s)
{
    Engine e = make_engine(s);
    auto& reg = e.registry();
    const auto& g = e.graph();
    const auto& cat = e.catalog();
    std::cout << "rows: " << g.nodes.size() << "\n";
    print_graph_status(g);
    std::cout << "\n";
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        const auto& node = g.nodes[i];
        std::cout << "row: " << i + 1 << "\n"
                  << "pair: " << pair_string(reg, node) << "\n"
                  << "key: " << key_string(pair_key(reg, node)) << "\n"
                  << "chamber: " << vectors_string(cone_of_pair(reg, node)) << "\n"
                  << "g_matrix: " << g_matrix(reg, node).str() << "\n"
                  << "c_matrix: " << c_matrix(reg, node).str() << "\n";
        if (g.complete) {
            auto tc = fac(t_modules(reg, node), cat);
            std::string members;
            for (int m : tc.members)
                members += (members.empty() ? "" : ",") + cat[m].id;
            std::cout << "torsion_class: {" << members << "}\n";
        }
        std::cout << "\n";
    }
    return graph_exit(g);
}

int cmd_render(const Settings& s)
{
    Engine e = make_engine(s);
    std::optional<QVec> projection;
    if (!s.project.empty()) {
        QVec p = parse_list(s.project, "--project");
        if (p.size() != 3)
            throw usage_error("cli", "--project needs three coordinates");
        projection = p;
    }
    std::string svg = e.render_svg(projection);
    write_output(s.out, svg);
    std::ostream& os = s.out == "-" ? std::cerr : std::cout;
    os << "walls: " << e.wall_geometry().size() << "\n";
    os << "output: " << s.out << "\n";
    return 0;
}

int cmd_selfcheck(const Settings& s)
{
    Engine e = make_engine(s);
    const auto& g = e.graph();
    auto results = run_all_suites(e);
    int failures = 0;
    std::string first;
    for (const auto& r : results) {
        std::cout << "SUITE " << r.name << " status=" << status_string(r.status) << " checks=" << r.checks;
        if (!r.detail.empty())
            std::cout << " detail=\"" << r.detail << "\"";
        std::cout << "\n";
        if (r.status == SuiteStatus::Fail && failures++ == 0)
            first = r.name + ": " + r.detail;
    }
    if (g.complete)
        std::cout << "chambers: " << e.chamber_list().size() << "\n" << "pairs: " << g.nodes.size() << "\n";
    else
        std::cout << "finiteness: tau-tilting infinite suspected (" << g.cap << ")\n";
    std::cout << "selfcheck: " << (failures ? "fail" : g.complete ? "pass" : "partial") << "\n";
    if (failures) {
        std::cerr << "counterexample: " << first << "\n";
        return kExitInconsistent;
    }
    return graph_exit(g);
}

int exit_code(const Error& e)
{
    switch (e.kind()) {
    case ErrorKind::Budget: return kExitBudget;
    case ErrorKind::Inconsistency: return kExitInconsistent;
    default: return kExitUsage;
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"taufan: tau-tilting theory and wall-and-chamber structures of bound quiver algebras"};
    app.require_subcommand(1);
    Settings s;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("algebra", s.algebra, "algebra file")->required();
        sub->add_option("--max-nodes", s.max_nodes, "mutation graph node cap")->capture_default_str()->check(CLI::PositiveNumber);
        sub->add_option("--max-depth", s.max_depth, "mutation graph depth cap")->capture_default_str()->check(CLI::PositiveNumber);
        sub->add_option("--max-module-dim", s.max_module_dim, "largest tau-rigid summand explored")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
        sub->add_option("--bound", s.bound, "catalog dimension bound, e.g. \"1,1,1\"");
        sub->add_option("--kronecker-depth", s.kronecker_depth, "closed-form Kronecker walls up to this m")
            ->capture_default_str()
            ->check(CLI::NonNegativeNumber);
    };

    std::map<CLI::App*, std::function<int()>> actions;
    auto sub = [&](const std::string& name, const std::string& help, std::function<int()> run) {
        CLI::App* c = app.add_subcommand(name, help);
        add_common(c);
        actions[c] = std::move(run);
        return c;
    };

    sub("check", "validate an algebra file", [&] { return cmd_check(s); });
    sub("indec", "brute-force indecomposables", [&] { return cmd_indec(s); })
        ->add_option("--max-dim", s.max_dim, "dimension bound at every vertex")
        ->capture_default_str();
    sub("pairs", "support tau-tilting pairs by mutation", [&] { return cmd_pairs(s); });
    auto mg = sub("mutation-graph", "export the mutation graph", [&] { return cmd_mutation_graph(s); });
    mg->add_option("--dot", s.dot, "output path, - for stdout")->required();
    mg->add_flag("--labels", s.labels, "label edges with bricks");
    sub("hasse", "export the Hasse diagram of torsion classes", [&] { return cmd_hasse(s); })
        ->add_option("--dot", s.dot, "output path, - for stdout")
        ->required();
    sub("gmatrix", "g-matrices", [&] { return cmd_matrix(s, false); })->add_option("--pair", s.pair, "pair index, name or key");
    sub("cmatrix", "c-matrices", [&] { return cmd_matrix(s, true); })->add_option("--pair", s.pair, "pair index, name or key");
    sub("walls", "walls of catalog modules", [&] { return cmd_walls(s); });
    sub("chambers", "chambers and their generators", [&] { return cmd_chambers(s); });
    auto st = sub("stability", "King semistability of a module", [&] { return cmd_stability(s); });
    st->add_option("--module", s.module, "module file")->required();
    st->add_option("--vector", s.vector, "stability vector, e.g. \"1,-1\"")->required();
    sub("table", "chambers, pairs, g- and c-matrices, torsion classes", [&] { return cmd_table(s); });
    auto rd = sub("render", "draw the wall-and-chamber structure as SVG", [&] { return cmd_render(s); });
    rd->add_option("--out", s.out, "output path, - for stdout")->required();
    rd->add_option("--project", s.project, "projection point for three vertices, e.g. \"1,1,1\"");
    sub("selfcheck", "run every invariant suite", [&] { return cmd_selfcheck(s); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        for (auto& [c, run] : actions)
            if (c->parsed())
                return run();
    } catch (const Error& e) {
        std::cerr << "error: " << e.module() << ": " << e.what() << "\n";
        return exit_code(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInconsistent;
    }
    return kExitUsage;
}
