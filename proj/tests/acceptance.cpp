// One line per acceptance criterion. Exit status 0 when every criterion passes or is listed
// with --expect-fail; criterion 10 runs only with --slow.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "arq/arquiver.hpp"
#include "arq/denom.hpp"
#include "arq/io.hpp"
#include "arq/seqcalc.hpp"
#include "oracle.hpp"

using namespace arq;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
    void note(const std::string& what) {
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

ARQuiver from_fixture(const char* name) {
    auto f = load_grid(name);
    return ARQuiver(DynkinQuiver::parse(root_system(f.system), f.quiver));
}

std::vector<DynkinQuiver> orientations(std::initializer_list<const char*> names) {
    std::vector<DynkinQuiver> out;
    for (const char* n : names)
        for (auto& q : DynkinQuiver::all_orientations(root_system(n))) out.push_back(q);
    return out;
}

std::vector<RootId> roots_of(const RootSystem& sys, const std::vector<std::string>& names) {
    std::vector<RootId> out;
    for (const auto& n : names) out.push_back(sys.parse_root(n));
    return out;
}

Word residues(const ARQuiver& g, const std::vector<RootId>& roots) {
    Word w;
    for (RootId r : roots) w.push_back(g.residue(r));
    return w;
}

// smallest member, used as a class key
Word canonical(const CommClass& c) { return enumerate_class(c, kDefaultPartitionCap).front(); }

std::vector<std::string> sorted_texts(const CommClass& c, const std::vector<RootSequence>& ms) {
    std::vector<std::string> out;
    for (const auto& m : ms) out.push_back(format_sequence(c, m));
    std::sort(out.begin(), out.end());
    return out;
}

// printed readings: each is a Q-reading and an adapted word, all in one class
void check_readings(const char* name, Outcome& out) {
    auto f = load_readings(name);
    auto sys = root_system(f.system);
    ARQuiver g(DynkinQuiver::parse(sys, f.quiver));
    auto words = g.adapted_words(kDefaultPartitionCap);
    std::sort(words.begin(), words.end());
    std::set<Word> classes;
    for (const auto& reading : f.readings) {
        auto roots = roots_of(*sys, reading);
        Word w = residues(g, roots);
        bool ok = is_reduced(*sys, w) && roots_of_word(*sys, w) == roots && g.is_reading(roots) &&
                  std::binary_search(words.begin(), words.end(), w);
        out.require(ok, std::string(name) + " reading not reproduced: " + format_word(w));
        classes.insert(canonical(CommClass(sys, w)));
    }
    out.require(classes.size() == 1, std::string(name) + " readings span several classes");
    out.note(std::to_string(f.readings.size()) + " " + name + " readings in one class of " + std::to_string(words.size()));
}

Outcome criterion1() {
    Outcome out;
    auto a5 = root_system("A5");
    std::vector<std::string> printed = {"[1]", "[3]", "[1,3]", "[2,3]", "[3,4]", "[1,4]", "[2,4]", "[4]",
                                        "[3,5]", "[1,5]", "[2,5]", "[4,5]", "[5]", "[1,2]", "[2]"};
    auto roots = roots_of_word(*a5, parse_word("1 3 2 1 4 3 2 1 5 4 3 2 1 5 4", 5));
    std::vector<std::string> got;
    for (RootId r : roots) got.push_back(a5->format_root(r));
    out.require(got == printed, "15-root order differs");
    check_readings("a5", out);
    return out;
}

Outcome criterion2() {
    Outcome out;
    check_readings("d4", out);
    auto d4 = root_system("D4");
    ARQuiver g(DynkinQuiver::parse(d4, "3>2,2>1,2>4"));
    SequenceCalculus calc(g.commutation_class());
    const CommClass& c = calc.comm_class();
    auto R = [&](const char* s) { return d4->parse_root(s); };
    auto soc = calc.socle(R("{2|-4}"), R("{1|2}"));
    out.require(soc.unique() && format_sequence(c, soc.candidates[0]) == "({1|-4},{2|3},{2|-3})", "socle");
    auto mins = sorted_texts(c, calc.minimal_sequences(RootSequence::of({R("{1|2}")})));
    out.require(mins == std::vector<std::string>{"({1|-4},{2|4})", "({2|-3},{1|3})", "({2|3},{1|-3})"}, "minimal pairs");
    out.require(calc.is_simple_pair(R("{2|4}"), R("{1|3}")), "({2|4},{1|3}) not simple");
    for (RootId r = d4->rank(); r < d4->size(); ++r)
        out.require(calc.radius(r) == (r == R("{1|2}") ? 2 : 1), "radius of " + d4->format_root(r));
    return out;
}

Outcome criterion3() {
    Outcome out;
    auto a5 = root_system("A5");
    CommClass c(a5, parse_word("1 2 3 5 4 3 1 2 3 5 4 3 1 2 3", 5));
    out.require(!find_quiver(c), "class is adapted to a quiver");
    SequenceCalculus calc(c);
    int d1 = calc.dist(a5->parse_root("[1]"), a5->parse_root("[2,5]"));
    int d2 = calc.dist(a5->parse_root("[1,2]"), a5->parse_root("[3,5]"));
    out.require(d1 == 2 && d2 == 2, "wrong distances");
    out.note("dist " + std::to_string(d1) + ", " + std::to_string(d2) + "; no adapted quiver");
    return out;
}

Outcome criterion4() {
    Outcome out;
    auto f = load_grid("e6");
    auto e6 = root_system(f.system);
    ARQuiver g(DynkinQuiver::parse(e6, f.quiver));
    auto diff = diff_grid(f, g);
    out.require(f.cells.size() == 36 && diff.empty(), "grid: " + (diff.empty() ? std::string("size") : diff.front()));
    SequenceCalculus calc(g.commutation_class());
    const CommClass& c = calc.comm_class();
    RootId a = e6->parse_root("111001"), b = e6->parse_root("123212");
    out.require(calc.dist(a, b) == 1, "dist");
    out.require(calc.gdist(calc.as_sequence(calc.make_pair(a, b))) == 2, "gdist");
    auto soc = calc.socle(a, b);
    out.require(soc.unique() && soc.candidates[0] == parse_sequence(*e6, "(001001,122101,111111)"), "socle");
    if (soc.unique()) {
        auto mins = calc.minimal_sequences(soc.candidates[0]);
        for (const char* s : {"(111101,122111,001001)", "(011001,112101,111111)"})
            out.require(std::count(mins.begin(), mins.end(), parse_sequence(*e6, s)) == 1, std::string("minimal ") + s);
        out.note("socle printed as " + format_sequence(c, soc.candidates[0]));
    }
    CommClass other(e6, parse_word("1 2 6 3 5 4 6 1 3 2 6 3 5 6 4 1 3 2 6 3 5 6 4 1 3 2 6 3 5 6 4 1 3 2 6 3", 6));
    SequenceCalculus calc2(other);
    auto undefined = calc2.socle(e6->parse_root("110000"), e6->parse_root("123211"));
    std::vector<RootSequence> want;
    // the first printed label 123111 has the wrong weight; 122111 is the only completion
    for (const char* s : {"(122111,111100)", "(111000,122211)", "(111110,122101)"}) want.push_back(parse_sequence(*e6, s));
    std::sort(want.begin(), want.end());
    auto got = undefined.candidates;
    std::sort(got.begin(), got.end());
    out.require(!find_quiver(other) && got == want, "non-adapted socle report");
    out.note("s1 read as (122111,111100)");
    return out;
}

Outcome criterion5() {
    Outcome out;
    int checked = 0, bad = 0;
    for (auto& q : orientations({"A2", "A3", "A4", "A5", "D4", "D5", "E6"})) {
        ARQuiver g(q);
        SequenceCalculus calc(g.commutation_class());
        for (RootId r = q.system().rank(); r < q.system().size(); ++r) {
            ++checked;
            if (calc.radius(r) != q.system().mul(r)) {
                if (bad++ == 0) out.require(false, q.system().name() + " " + q.format() + " " + q.system().format_root(r));
            }
        }
    }
    out.note(std::to_string(checked) + " roots, " + std::to_string(bad) + " mismatches");
    return out;
}

Outcome criterion6() {
    Outcome out;
    long checked = 0;
    for (auto& q : orientations({"A2", "A3", "A4", "A5", "D4", "D5"})) {
        ARQuiver g(q);
        const RootSystem& sys = q.system();
        SequenceCalculus calc(g.commutation_class());
        int bound = sys.kind() == Kind::A ? 1 : 2;
        for (RootId a = 0; a < sys.size(); ++a)
            for (RootId b = a + 1; b < sys.size(); ++b, ++checked)
                if (calc.dist(a, b) > bound) out.require(false, sys.name() + " " + q.format());
    }
    out.note(std::to_string(checked) + " pairs");
    return out;
}

Outcome criterion7() {
    Outcome out;
    int quivers = 0;
    for (auto& q : orientations({"A1", "A2", "A3", "A4", "A5", "A6", "D4", "D5", "D6"})) {
        ++quivers;
        auto bad = verify_denominator(q);
        if (!bad.empty())
            out.require(false, q.system().name() + " " + q.format() + " at (" + std::to_string(bad[0].k + 1) + "," +
                                   std::to_string(bad[0].l + 1) + "): " + format_polynomial(bad[0].computed) +
                                   " vs " + format_polynomial(bad[0].expected));
    }
    out.note(std::to_string(quivers) + " quivers");
    return out;
}

Outcome criterion8() {
    Outcome out;
    auto e6 = root_system("E6");
    auto printed = load_table("e6");
    auto orders = oracle::quantum_cartan_orders(*e6);
    std::vector<TableEntry> first;
    bool independent = true, oracle_ok = true;
    for (auto& q : DynkinQuiver::all_orientations(e6)) {
        auto table = conjecture_table(q);
        if (first.empty()) first = table;
        for (size_t i = 0; i < table.size(); ++i) independent = independent && table[i].poly == first[i].poly;
        for (const auto& e : table) {
            DistancePolynomial want;
            for (int t = 0; t < static_cast<int>(orders[e.k][e.l].size()); ++t) want.add(t, orders[e.k][e.l][t]);
            oracle_ok = oracle_ok && e.poly == want;
        }
    }
    out.require(independent, "table depends on the orientation");
    auto entry = [&](int k, int l) {
        if (k > l) std::swap(k, l);
        for (const auto& e : first)
            if (e.k == k && e.l == l) return e.poly;
        return DistancePolynomial{};
    };
    int matched = 0;
    for (const auto& row : printed.rows) {
        auto want = parse_polynomial(row.text);
        bool ok = true;
        for (auto [k, l] : row.entries) ok = ok && entry(k - 1, l - 1) == want;
        if (ok) {
            ++matched;
        } else {
            auto [k, l] = row.entries.front();
            out.require(false, "d" + std::to_string(k) + std::to_string(l) + " printed " + row.text + ", computed " +
                                   format_polynomial(entry(k - 1, l - 1)));
        }
    }
    out.note(std::to_string(matched) + "/" + std::to_string(printed.rows.size()) + " printed formulas match");
    out.note(std::string("inverse quantum Cartan oracle ") + (oracle_ok ? "agrees" : "DISAGREES") + " on all 32 orientations");
    return out;
}

Outcome criterion9() {
    Outcome out;
    std::mt19937 rng(2024);
    auto a4 = root_system("A4");
    std::vector<CommClass> classes;
    std::set<Word> seen;
    for (int k = 0; k < 50; ++k) {
        CommClass c(a4, random_longest_word(*a4, rng));
        if (seen.insert(canonical(c)).second) classes.push_back(c);
    }
    classes.push_back(ARQuiver(DynkinQuiver::parse(root_system("D4"), "3>2,2>1,2>4")).commutation_class());
    long comparisons = 0;
    for (const auto& c : classes) {
        const RootSystem& sys = c.system();
        std::vector<std::vector<int>> members;
        for (const auto& w : enumerate_class(c, kDefaultPartitionCap)) members.push_back(oracle::positions(sys, w));
        auto all = c.roots_in_order();
        std::set<std::array<std::int8_t, kMaxRank>> weights;
        for (RootId a : all)
            for (RootId b : all) {
                Weight w = sys.root(a) + sys.root(b);
                if (!weights.insert(w.c).second) continue;
                auto family = oracle::partitions(sys, all, w);
                for (const auto& x : family)
                    for (const auto& y : family) {
                        ++comparisons;
                        if (coarse_less(c, x, y) != oracle::coarse(members, x, y))
                            out.require(false, format_sequence(c, x) + " vs " + format_sequence(c, y) + " in " +
                                                   format_word(c.word()));
                    }
            }
    }
    out.note(std::to_string(classes.size()) + " classes, " + std::to_string(comparisons) + " comparisons");
    return out;
}

// a chain of non-simple pairs of the same weight, increasing in the coarse order
bool printed_chain(SequenceCalculus& calc, RootId top, const std::vector<std::pair<const char*, const char*>>& pairs) {
    const RootSystem& sys = calc.system();
    RootSequence prev = RootSequence::of({top});
    for (auto [x, y] : pairs) {
        RootId a = sys.parse_root(x), b = sys.parse_root(y);
        auto p = calc.as_sequence(calc.make_pair(a, b));
        if (p.weight(sys) != sys.root(top) || calc.is_simple(p)) return false;
        if (!coarse_less(calc.comm_class(), prev, p)) return false;
        prev = p;
    }
    return true;
}

Outcome criterion10() {
    Outcome out;
    {
        ARQuiver g = from_fixture("e7");
        SequenceCalculus calc(g.commutation_class());
        RootId gm = g.system().parse_root("1122221");
        out.require(calc.radius(gm) == 3, "E7 radius of 1122221");
        // printed with the six-digit label 101110 for 1011110
        out.require(printed_chain(calc, gm, {{"1011110", "0111111"}, {"1122111", "0000110"}, {"1122110", "0000111"}}),
                    "E7 chain");
    }
    ARQuiver g = from_fixture("e8");
    const RootSystem& sys = g.system();
    SequenceCalculus calc(g.commutation_class());
    RootId r1 = sys.parse_root("23465431"), r2 = sys.parse_root("23465432");
    int rds1 = calc.radius(r1), rds2 = calc.radius(r2);
    out.require(rds1 == 5 && rds2 == 5, "E8 radii " + std::to_string(rds1) + "," + std::to_string(rds2));
    out.require(printed_chain(calc, r2,
                              {{"12233221", "11232211"}, {"22344321", "01121111"}, {"22343321", "01122111"},
                               {"22343221", "01122211"}, {"23454321", "00011111"}}),
                "E8 chain");
    out.note("radius 5 for 23465431 and 23465432; printed chain sums to 23465432");
    auto soc = calc.socle(sys.parse_root("11111100"), sys.parse_root("12233321"));
    auto want = parse_sequence(sys, "(11111111,11222210,01011100)");
    out.require(soc.unique() && soc.candidates[0] == want, "E8 socle");
    out.note("printed socle label 01111100 has the wrong weight; found 11222210");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    bool slow = false;
    std::vector<int> expect_fail, only;
    app.add_flag("--slow", slow, "include the E7/E8 criterion");
    app.add_option("--expect-fail", expect_fail, "criteria whose failure does not change the exit status");
    app.add_option("--only", only, "run only these criteria");
    CLI11_PARSE(app, argc, argv);

    struct Criterion {
        int id;
        double budget;  // seconds
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, 1, criterion1},     {2, 5, criterion2},     {3, 5, criterion3},    {4, 60, criterion4},
        {5, 600, criterion5},   {6, 300, criterion6},   {7, 600, criterion7},  {8, 1800, criterion8},
        {9, 600, criterion9},   {10, 1800, criterion10},
    };
    int status = 0;
    for (const auto& c : criteria) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        if (c.id == 10 && !slow) {
            std::printf("criterion %2d: SKIP (slow suite, pass --slow)\n", c.id);
            continue;
        }
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.budget) o.require(false, "over budget");
        bool expected = std::find(expect_fail.begin(), expect_fail.end(), c.id) != expect_fail.end();
        const char* tag = o.pass ? "PASS" : "FAIL";
        std::printf("criterion %2d: %s%s (%.2f s of %.0f s) %s\n", c.id, tag, !o.pass && expected ? " (expected)" : "",
                    secs, c.budget, o.detail.c_str());
        if (!o.pass && !expected) status = 1;
    }
    return status;
}
