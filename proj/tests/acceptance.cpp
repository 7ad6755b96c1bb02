// One PASS/FAIL line per acceptance criterion. The CLI binary is driven
// through popen so the user-facing surface is what gets checked.

#include "taufan/suites.hpp"
#include "test_support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <sys/wait.h>

#ifndef TAUFAN_CLI
#define TAUFAN_CLI "taufan"
#endif

using namespace taufan;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run cli(const std::string& args)
{
    Run r;
    std::string cmd = std::string(TAUFAN_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, n);
    int st = pclose(pipe);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string alg(const std::string& name)
{
    return data_path("algebras/" + name);
}

std::vector<std::string> lines_with(const std::string& text, const std::string& prefix)
{
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line))
        if (line.rfind(prefix, 0) == 0)
            out.push_back(line);
    return out;
}

std::string field(const std::string& line, const std::string& key)
{
    auto pos = line.find(" " + key + "=");
    if (pos == std::string::npos)
        return "";
    pos += key.size() + 2;
    auto end = line.find(' ', pos);
    return line.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
}

int count(const std::string& hay, const std::string& needle)
{
    int n = 0;
    for (size_t pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1))
        ++n;
    return n;
}

std::vector<std::map<std::string, std::string>> blocks(const std::string& text)
{
    std::vector<std::map<std::string, std::string>> out(1);
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) {
            if (!out.back().empty())
                out.emplace_back();
            continue;
        }
        auto c = line.find(": ");
        if (c != std::string::npos)
            out.back()[line.substr(0, c)] = line.substr(c + 2);
    }
    if (out.back().empty())
        out.pop_back();
    return out;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty())
        out.push_back(cur);
    return out;
}

// "(T: a,b | P: c)" -> summand labels "T:a", "T:b", "P:c" in printed order.
std::vector<std::string> summands(const std::string& pair)
{
    std::vector<std::string> out;
    auto bar = pair.find(" | P:");
    std::string t = pair.substr(3, bar - 3);
    std::string p = pair.substr(bar + 5, pair.size() - bar - 6);
    for (auto* part : {&t, &p}) {
        std::string s = *part;
        s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
        for (const auto& x : split(s, ','))
            out.push_back(std::string(part == &t ? "T:" : "P:") + x);
    }
    return out;
}

std::vector<IntVec> parse_matrix(const std::string& s)
{
    std::vector<IntVec> rows;
    IntVec cur;
    std::string num;
    int depth = 0;
    for (char ch : s) {
        if (ch == '[') {
            ++depth;
        } else if (ch == ']' || ch == ',') {
            if (!num.empty()) {
                cur.push_back(std::stoi(num));
                num.clear();
            }
            if (ch == ']' && --depth == 1) {
                rows.push_back(cur);
                cur.clear();
            }
        } else {
            num += ch;
        }
    }
    return rows;
}

struct TableRow {
    std::vector<std::string> t, p;
    std::vector<IntVec> g, c;
    std::set<std::string> torsion;
};

std::vector<TableRow> paper_table()
{
    using M = std::vector<IntVec>;
    const M I{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    const M mI{{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
    auto same = [](M g) { return std::make_pair(g, g); };
    std::vector<TableRow> rows;
    auto add = [&](std::vector<std::string> t, std::vector<std::string> p, std::pair<M, M> gc, std::set<std::string> tc) {
        rows.push_back({t, p, gc.first, gc.second, tc});
    };
    add({"1/2", "2/3", "3/1"}, {}, same(I), {"1", "2", "3", "1/2", "2/3", "3/1"});
    add({"3", "2/3", "3/1"}, {}, same({{-1, 0, 0}, {0, 1, 0}, {1, 0, 1}}), {"2/3", "3/1", "2", "3"});
    add({"1/2", "1", "3/1"}, {}, same({{1, 1, 0}, {0, -1, 0}, {0, 0, 1}}), {"1/2", "3/1", "1", "3"});
    add({"1/2", "2/3", "2"}, {}, same({{1, 0, 0}, {0, 1, 1}, {0, 0, -1}}), {"1/2", "2/3", "1", "2"});
    add({"3", "2/3"}, {"1/2"}, {{{-1, 0, -1}, {0, 1, 0}, {1, 0, 0}}, {{0, 0, 1}, {0, 1, 0}, {-1, 0, -1}}}, {"2/3", "2", "3"});
    add({"3", "3/1"}, {"2/3"}, {{{-1, 0, 0}, {0, 0, -1}, {1, 1, 0}}, {{-1, 0, 0}, {1, 0, 1}, {0, -1, 0}}}, {"3/1", "3"});
    add({"1", "3/1"}, {"2/3"}, {{{1, 0, 0}, {-1, 0, -1}, {0, 1, 0}}, {{1, 0, 0}, {0, 0, 1}, {-1, -1, 0}}}, {"3/1", "1", "3"});
    add({"1/2", "1"}, {"3/1"}, same({{1, 1, 0}, {0, -1, 0}, {0, 0, -1}}), {"1/2", "1"});
    add({"1/2", "2"}, {"3/1"}, same({{1, 0, 0}, {0, 1, 0}, {0, -1, -1}}), {"1/2", "1", "2"});
    add({"2/3", "2"}, {"1/2"}, {{{0, 0, -1}, {1, 1, 0}, {0, -1, 0}}, {{0, 1, 1}, {0, 0, -1}, {-1, 0, 0}}}, {"2/3", "2"});
    add({"3"}, {"1/2", "2/3"}, {{{-1, -1, 0}, {0, 0, -1}, {1, 0, 0}}, {{0, 0, 1}, {-1, 0, -1}, {0, -1, 0}}}, {"3"});
    add({"1"}, {"2/3", "3/1"}, same({{1, 0, 0}, {-1, -1, 0}, {0, 0, -1}}), {"1"});
    add({"2"}, {"1/2", "3/1"}, {{{0, -1, 0}, {1, 0, 0}, {-1, 0, -1}}, {{0, 1, 0}, {-1, 0, 0}, {0, -1, -1}}}, {"2"});
    add({}, {"1/2", "2/3", "3/1"}, {mI, mI}, {});
    return rows;
}

// Reorders the columns of m (given for the summands `have`) into the order `want`.
std::vector<IntVec> reorder_columns(const std::vector<IntVec>& m, const std::vector<std::string>& have,
                                    const std::vector<std::string>& want)
{
    std::vector<IntVec> out(m.size(), IntVec(want.size(), 0));
    for (size_t j = 0; j < want.size(); ++j) {
        auto it = std::find(have.begin(), have.end(), want[j]);
        if (it == have.end())
            return {};
        size_t src = it - have.begin();
        for (size_t i = 0; i < m.size(); ++i)
            out[i][j] = m[i][src];
    }
    return out;
}

std::vector<IntVec> transpose(const std::vector<IntVec>& m)
{
    if (m.empty())
        return m;
    std::vector<IntVec> t(m[0].size(), IntVec(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j)
            t[j][i] = m[i][j];
    return t;
}

struct Criterion {
    int number;
    std::string title;
    double budget_seconds;
    std::function<std::string()> check;  // empty string on success
};

std::string suite_failures(const std::vector<std::string>& files, const std::vector<SuiteResult (*)(Engine&)>& suites,
                           bool allow_skip = false)
{
    for (const auto& f : files) {
        Engine e(load_algebra(alg(f)));
        for (auto s : suites) {
            SuiteResult r = s(e);
            if (r.status == SuiteStatus::Fail)
                return f + " " + r.name + ": " + r.detail;
            if (r.status == SuiteStatus::Skipped && !allow_skip)
                return f + " " + r.name + " skipped: " + r.detail;
            if (r.status == SuiteStatus::Pass && r.checks == 0)
                return f + " " + r.name + " checked nothing";
        }
    }
    return "";
}

std::string criterion_1()
{
    Run r = cli("pairs " + alg("a2.alg"));
    if (r.status != 0)
        return "exit status " + std::to_string(r.status);
    std::set<std::string> got;
    for (const auto& line : lines_with(r.out, "PAIR ")) {
        auto a = line.find('(');
        auto b = line.find(')');
        got.insert(line.substr(a, b - a + 1));
    }
    std::set<std::string> want{"(T: 2,1/2 | P:)", "(T: 1,1/2 | P:)", "(T: 2 | P: 1/2)", "(T: 1 | P: 2)",
                               "(T: | P: 1/2,2)"};
    if (lines_with(r.out, "PAIR ").size() != 5)
        return "expected 5 pairs";
    return got == want ? "" : "pair list differs";
}

std::string criterion_2()
{
    Run r = cli("walls " + alg("a2.alg"));
    if (r.status != 0)
        return "exit status " + std::to_string(r.status);
    auto walls = lines_with(r.out, "WALL ");
    if (walls.size() != 3)
        return std::to_string(walls.size()) + " walls";
    std::map<std::string, std::string> want{
        {"1", "eq=(1,0) ineqs=0 generators=[+-(0,1)]"},
        {"2", "eq=(0,1) ineqs=0 generators=[+-(1,0)]"},
        {"1/2", "eq=(1,1) ineqs=1 generators=[(1,-1)]"},
    };
    for (const auto& line : walls) {
        std::string id = split(line, ' ')[1];
        std::string rest = "eq=" + field(line, "eq") + " ineqs=" + field(line, "ineqs") + " generators=" + field(line, "generators");
        if (!want.count(id) || want[id] != rest)
            return "unexpected wall: " + line;
        want.erase(id);
    }
    // The ray is {(x,-x) : x >= 0}: a half-line, not the whole line.
    auto p1 = load_algebra(alg("a2.alg"));
    Engine e(p1);
    for (const auto& w : e.walls())
        if (e.catalog()[w.module].id == "1/2") {
            HCone h = w.space.cone;
            if (!contains(h, QVec{1, -1}) || contains(h, QVec{-1, 1}) || contains(h, QVec{1, 0}))
                return "D(1/2) is not the ray through (1,-1)";
        }
    return want.empty() ? "" : "missing walls";
}

std::string criterion_3()
{
    Run pairs = cli("pairs " + alg("cycle3.alg"));
    if (pairs.status != 0 || lines_with(pairs.out, "PAIR ").size() != 14)
        return "pairs did not give 14 tau-tilting pairs";
    Run ch = cli("chambers " + alg("cycle3.alg"));
    if (ch.status != 0 || lines_with(ch.out, "CHAMBER ").size() != 14)
        return "chambers did not give 14 chambers";
    Run table = cli("table " + alg("cycle3.alg"));
    if (table.status != 0)
        return "table exit status " + std::to_string(table.status);
    std::vector<std::map<std::string, std::string>> rows;
    for (auto& b : blocks(table.out))
        if (b.count("row"))
            rows.push_back(b);
    if (rows.size() != 14)
        return std::to_string(rows.size()) + " table rows";
    std::set<int> matched;
    for (const auto& want : paper_table()) {
        std::vector<std::string> order;
        for (const auto& t : want.t)
            order.push_back("T:" + t);
        for (const auto& p : want.p)
            order.push_back("P:" + p);
        std::set<std::string> want_set(order.begin(), order.end());
        int found = -1;
        for (size_t i = 0; i < rows.size(); ++i) {
            auto have = summands(rows[i].at("pair"));
            if (std::set<std::string>(have.begin(), have.end()) == want_set)
                found = static_cast<int>(i);
        }
        if (found < 0)
            return "no computed pair matches table row " + std::to_string(matched.size() + 1);
        matched.insert(found);
        const auto& row = rows[found];
        auto have = summands(row.at("pair"));
        auto g = reorder_columns(parse_matrix(row.at("g_matrix")), have, order);
        auto c = transpose(reorder_columns(parse_matrix(row.at("c_matrix")), have, order));
        if (g != want.g)
            return "G differs for " + row.at("pair");
        if (c != want.c)
            return "C differs for " + row.at("pair");
        std::string tc = row.at("torsion_class");
        std::set<std::string> members;
        for (const auto& m : split(tc.substr(1, tc.size() - 2), ','))
            members.insert(m);
        if (members != want.torsion)
            return "torsion class differs for " + row.at("pair");
    }
    return matched.size() == 14 ? "" : "table rows matched more than once";
}

std::string criterion_4()
{
    const int depth = 5;
    Run r = cli("walls " + alg("kronecker.alg") + " --kronecker-depth " + std::to_string(depth));
    if (r.status != 0)
        return "walls exit status " + std::to_string(r.status);
    std::map<std::string, std::string> rays;  // dims -> generators
    for (const auto& line : lines_with(r.out, "WALL "))
        rays[field(line, "dim")] = field(line, "generators");
    auto vec = [](int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; };
    auto expect = [&](int d1, int d2, int x, int y) -> std::string {
        auto it = rays.find(vec(d1, d2));
        if (it == rays.end())
            return "no wall for dimension vector " + vec(d1, d2);
        if (it->second != "[" + vec(x, y) + "]")
            return "wall of " + vec(d1, d2) + " is " + it->second + ", expected ray " + vec(x, y);
        return "";
    };
    for (int m = 0; m <= depth; ++m) {
        std::string err;
        if (m >= 1 && !(err = expect(2 * m, 2 * m + 1, 2 * m + 1, -2 * m)).empty())
            return err;
        if (!(err = expect(2 * m + 1, 2 * m + 2, 2 * (m + 1), -(2 * m + 1))).empty())
            return err;
        if (m >= 1 && !(err = expect(2 * m + 1, 2 * m, 2 * m, -(2 * m + 1))).empty())
            return err;
        if (!(err = expect(2 * m + 2, 2 * m + 1, 2 * m + 1, -2 * (m + 1))).empty())
            return err;
    }
    if (count(r.out, "limit=yes") != 1)
        return "missing the limit ray of the regular modules";

    // Brute-force stability spaces for the small members of each family.
    auto kr = load_algebra(alg("kronecker.alg"));
    for (const IntVec& bound : {IntVec{3, 2}, IntVec{2, 3}}) {
        auto cat = enumerate_indecomposables(kr, bound);
        for (const auto& e : cat.entries()) {
            auto it = rays.find(vector_string(e.module.dims()));
            if (it == rays.end() || e.module.dims() == IntVec{1, 1})
                continue;
            VCone g = generators_of(stability_space(e.module).cone);
            std::string got = g.lineality.empty() ? "[" + vector_string(g.rays[0]) + "]"
                                                  : "[+-" + vector_string(g.lineality[0]) + "]";
            if (got != it->second)
                return "brute force gives " + got + " for " + e.id + ", closed form " + it->second;
        }
    }

    Run p = cli("pairs " + alg("kronecker.alg"));
    if (p.status != 2)
        return "mutation enumeration exit status " + std::to_string(p.status) + ", expected the cap status 2";
    if (p.out.find("infinite_suspected: yes") == std::string::npos || p.out.find("complete: no") == std::string::npos)
        return "cap reached without the infinite-suspected flag";
    return "";
}

std::string criterion_5()
{
    return suite_failures({"a2.alg", "cycle3.alg"}, {suite_ar_pairing});
}

std::string criterion_6()
{
    return suite_failures({"a2.alg", "cycle3.alg"}, {suite_fan});
}

std::string criterion_7()
{
    Engine e(load_algebra(alg("cycle3.alg")));
    if (e.graph().nodes.size() != 14)
        return "expected 14 pairs";
    return suite_failures({"a2.alg", "cycle3.alg"}, {suite_unimodularity, suite_semibricks, suite_sign_coherence});
}

std::string criterion_8()
{
    return suite_failures({"a2.alg", "cycle3.alg"}, {suite_semistable_equivalence, suite_stable_count});
}

std::string criterion_9()
{
    std::string err = suite_failures({"a2.alg", "cycle3.alg"},
                                     {suite_stable_brick, suite_bkt, suite_wide, suite_sum_rule, suite_rudakov, suite_skowronski});
    if (!err.empty())
        return err;
    return suite_failures({"a2_q.alg", "cycle3_q.alg"},
                          {suite_stable_brick, suite_bkt, suite_wide, suite_sum_rule, suite_skowronski});
}

std::string criterion_10()
{
    for (auto [name, walls] : {std::pair<std::string, int>{"a2", 3}, {"cycle3", 6}}) {
        Run first = cli("render " + alg(name + ".alg") + " --out -");
        Run second = cli("render " + alg(name + ".alg") + " --out -");
        if (first.status != 0 || second.status != 0)
            return "render failed on " + name;
        if (first.out != second.out)
            return "render output of " + name + " differs between runs";
        if (count(first.out, "<g class=\"wall\"") != walls)
            return name + " has " + std::to_string(count(first.out, "<g class=\"wall\"")) + " wall groups";
    }
    Run dot = cli("mutation-graph " + alg("cycle3.alg") + " --dot -");
    if (dot.status != 0)
        return "mutation-graph failed";
    if (count(dot.out, "[label=\"(T:") != 14)
        return "cycle DOT has " + std::to_string(count(dot.out, "[label=\"(T:")) + " nodes";
    Run labelled = cli("mutation-graph " + alg("a2.alg") + " --dot - --labels");
    if (labelled.status != 0)
        return "labelled mutation-graph failed";
    std::map<std::string, std::string> node;
    std::set<std::pair<std::string, std::string>> edges;
    for (const auto& line : lines_with(labelled.out, "  n")) {
        auto lab = line.find("[label=\"");
        std::string text = line.substr(lab + 8, line.rfind('"') - lab - 8);
        if (line.find(" -> ") == std::string::npos) {
            node[line.substr(2, line.find(' ', 2) - 2)] = text;
        } else {
            auto arrow = line.find(" -> ");
            std::string from = line.substr(2, arrow - 2);
            std::string to = line.substr(arrow + 4, line.find(' ', arrow + 4) - arrow - 4);
            edges.insert({node[from] + " -> " + node[to], text});
        }
    }
    std::set<std::pair<std::string, std::string>> want{
        {"(T: 2,1/2 | P:) -> (T: 1,1/2 | P:)", "2"},
        {"(T: 2,1/2 | P:) -> (T: 2 | P: 1/2)", "1"},
        {"(T: 1,1/2 | P:) -> (T: 1 | P: 2)", "1/2"},
        {"(T: 1 | P: 2) -> (T: | P: 1/2,2)", "1"},
        {"(T: 2 | P: 1/2) -> (T: | P: 1/2,2)", "2"},
    };
    return edges == want ? "" : "A2 brick labels differ from the labelled mutation diagram";
}

}  // namespace

int main()
{
    std::vector<Criterion> criteria{
        {1, "A2 has exactly 5 tau-tilting pairs", 1, criterion_1},
        {2, "A2 has exactly 3 walls", 1, criterion_2},
        {3, "3-cycle: 14 pairs, 14 chambers, G/C/Fac table", 10, criterion_3},
        {4, "Kronecker closed forms to m=5 and traversal cap", 5, criterion_4},
        {5, "AR pairing formula", 5, criterion_5},
        {6, "g-vector fan", 5, criterion_6},
        {7, "brick matrices, sign-coherence, semibricks", 10, criterion_7},
        {8, "semistables versus perpendicular categories", 10, criterion_8},
        {9, "property suites over F_2 and Q", 30, criterion_9},
        {10, "rendering determinism and DOT exports", 2, criterion_10},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string err;
        try {
            err = c.check();
        } catch (const std::exception& e) {
            err = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (err.empty() && secs > c.budget_seconds)
            err = "took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_seconds) + " s";
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << (err.empty() ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " (" << timing
                  << ")";
        if (!err.empty())
            std::cout << " -- " << err;
        std::cout << std::endl;
        failed += err.empty() ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
