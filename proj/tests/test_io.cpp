#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "arq/io.hpp"
#include "arq/seqcalc.hpp"

using namespace arq;

namespace {

struct FixtureDirOverride {
    explicit FixtureDirOverride(const std::string& dir) {
        if (const char* old = std::getenv("ARQ_FIXTURE_DIR")) saved = old;
        setenv("ARQ_FIXTURE_DIR", dir.c_str(), 1);
    }
    ~FixtureDirOverride() {
        if (saved.empty()) unsetenv("ARQ_FIXTURE_DIR");
        else setenv("ARQ_FIXTURE_DIR", saved.c_str(), 1);
    }
    std::string saved;
};

}  // namespace

TEST_CASE("json round trips") {
    for (const char* name : {"A1", "A4", "D5", "E6", "E8"}) {
        auto sys = root_system(name);
        json j = system_to_json(*sys);
        CHECK(system_from_json(json::parse(j.dump())) == sys);
        for (RootId r = 0; r < sys->size(); ++r) CHECK(root_from_json(*sys, root_to_json(*sys, r)) == r);

        auto q = DynkinQuiver::all_orientations(sys).back();
        ARQuiver g(q);
        json a = ar_to_json(g);
        CHECK(ar_from_json(sys, json::parse(a.dump())) == g);
        CHECK(a["vertices"].size() == static_cast<size_t>(sys->size()));

        CommClass c = g.commutation_class();
        json h = heap_to_json(c);
        CHECK(heap_from_json(sys, json::parse(h.dump())).word() == c.word());
    }
    auto d4 = root_system("D4");
    CommClass c(d4, parse_word("3 2 1 4 3 2 1 4 3 2 1 4", 4));
    auto m = parse_sequence(*d4, "({1|-4},{2|3},{2|-3})");
    json s = sequence_to_json(c, m);
    CHECK(s["text"] == "({1|-4},{2|3},{2|-3})");
    CHECK(sequence_from_json(*d4, json::parse(s.dump())) == m);

    DistancePolynomial d;
    d.add(2);
    d.add(5, 2);
    json p = polynomial_to_json(0, 4, d, true);
    CHECK(p["k"] == 1);
    CHECK(p["l"] == 5);
    CHECK(p["correction"] == true);
    CHECK(polynomial_from_json(json::parse(p.dump())) == d);
}

TEST_CASE("json rejects inconsistent data") {
    auto a3 = root_system("A3");
    CHECK_THROWS_AS(root_from_json(*a3, json::array({1, 0, 1})), NotARoot);
    CHECK_THROWS_AS(root_from_json(*a3, json::array({1, 0})), ParseError);
    ARQuiver g(DynkinQuiver::parse(a3, "1>2,2>3"));
    json a = ar_to_json(g);
    std::swap(a["vertices"][0]["root"], a["vertices"][1]["root"]);
    CHECK_THROWS_AS(ar_from_json(a3, a), ParseError);
    json h = heap_to_json(g.commutation_class());
    h["covers"].erase(0);
    CHECK_THROWS_AS(heap_from_json(a3, h), ParseError);
}

TEST_CASE("reference grids") {
    for (const char* name : {"e6", "e7", "e8"}) {
        auto f = load_grid(name);
        auto sys = root_system(f.system);
        ARQuiver g(DynkinQuiver::parse(sys, f.quiver));
        CAPTURE(name);
        CHECK(static_cast<int>(f.cells.size()) == sys->size());
        CHECK(diff_grid(f, g).empty());
    }
}

TEST_CASE("corrupted grids are reported") {
    auto f = load_grid("e6");
    ARQuiver g(DynkinQuiver::parse(root_system(f.system), f.quiver));
    auto swapped = f;
    std::swap(swapped.cells[3].root, swapped.cells[10].root);
    CHECK(diff_grid(swapped, g).size() == 2);
    auto bogus = f;
    bogus.cells[0].root = "222222";
    CHECK(diff_grid(bogus, g).size() == 1);
    auto missing = f;
    missing.cells.pop_back();
    CHECK(diff_grid(missing, g).size() == 1);
    auto moved = f;
    moved.cells[5].column += 2;
    CHECK(!diff_grid(moved, g).empty());
}

TEST_CASE("fixture directory override") {
    auto dir = std::filesystem::temp_directory_path() / "arq_fixture_test";
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(dir / "tiny.grid");
        out << "# quiver A2:1>2\n# comment\n1 0 [1]\n2 -1 [1,2]\n1 -2 [2]\n";
    }
    FixtureDirOverride env(dir.string());
    auto f = load_grid("tiny");
    CHECK(f.system == "A2");
    CHECK(f.quiver == "1>2");
    CHECK(f.cells.size() == 3);
    ARQuiver g(DynkinQuiver::parse(root_system("A2"), f.quiver));
    CHECK(diff_grid(f, g).empty());
    CHECK_THROWS_AS(load_grid("e6"), FixtureMissing);
    CHECK_THROWS_AS(load_readings("nothing"), FixtureMissing);
    std::filesystem::remove_all(dir);
}

TEST_CASE("dot and text output") {
    ARQuiver a1(DynkinQuiver::all_orientations(root_system("A1")).front());
    auto dot = ar_to_dot(a1);
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(dot.find("->") == std::string::npos);
    CHECK(dot.find("label=\"[1]\"") != std::string::npos);

    ARQuiver d4(DynkinQuiver::parse(root_system("D4"), "3>2,2>1,2>4"));
    auto text = ar_to_dot(d4);
    size_t arrows = 0;
    for (size_t k = text.find("->"); k != std::string::npos; k = text.find("->", k + 1)) ++arrows;
    CHECK(arrows == d4.arrows().size());
    CHECK(ar_to_dot(d4) == text);
    CHECK(ar_to_text(d4) == ar_to_text(ARQuiver(DynkinQuiver::parse(root_system("D4"), "3>2,2>1,2>4"))));
    CHECK(ar_to_text(d4).find("reading: 3 2 1 4 3 2 1 4 3 2 1 4") != std::string::npos);
}
