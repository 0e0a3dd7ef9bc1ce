#include <doctest.h>

#include <random>

#include "arq/words.hpp"
#include "oracle.hpp"

using namespace arq;

namespace {

std::vector<std::string> names(const RootSystem& sys, const std::vector<RootId>& roots) {
    std::vector<std::string> out;
    for (RootId r : roots) out.push_back(sys.format_root(r));
    return out;
}

// covers of the heap straight from the definition: p < q related when the letters are equal or adjacent,
// then the transitive reduction of the closure
std::vector<std::pair<int, int>> heap_covers(const RootSystem& sys, const Word& w) {
    const int t = static_cast<int>(w.size());
    std::vector<std::vector<bool>> rel(t, std::vector<bool>(t, false));
    for (int p = 0; p < t; ++p)
        for (int q = p + 1; q < t; ++q) rel[p][q] = w[p] == w[q] || sys.adjacent(w[p], w[q]);
    for (int m = 0; m < t; ++m)
        for (int p = 0; p < t; ++p)
            for (int q = 0; q < t; ++q)
                if (rel[p][m] && rel[m][q]) rel[p][q] = true;
    std::vector<std::pair<int, int>> out;
    for (int p = 0; p < t; ++p)
        for (int q = p + 1; q < t; ++q) {
            if (!rel[p][q]) continue;
            bool direct = true;
            for (int m = p + 1; m < q && direct; ++m)
                if (rel[p][m] && rel[m][q]) direct = false;
            if (direct) out.push_back({p, q});
        }
    return out;
}

}  // namespace

TEST_CASE("word text") {
    CHECK(parse_word("1 3 2", 3) == Word{0, 2, 1});
    CHECK(parse_word("s1s3s2", 3) == Word{0, 2, 1});
    CHECK(parse_word("1,3,2", 3) == Word{0, 2, 1});
    CHECK(format_word(Word{0, 2, 1}) == "1 3 2");
    CHECK_THROWS_AS(parse_word("1 4", 3), ParseError);
    CHECK_THROWS_AS(parse_word("1 x", 3), ParseError);
}

TEST_CASE("roots of the A5 example word") {
    auto sys = root_system("A5");
    Word w = parse_word("1 3 2 1 4 3 2 1 5 4 3 2 1 5 4", 5);
    CHECK(is_reduced(*sys, w));
    std::vector<std::string> want = {"[1]",   "[3]",   "[1,3]", "[2,3]", "[3,4]", "[1,4]", "[2,4]", "[4]",
                                     "[3,5]", "[1,5]", "[2,5]", "[4,5]", "[5]",   "[1,2]", "[2]"};
    CHECK(names(*sys, roots_of_word(*sys, w)) == want);
}

TEST_CASE("roots of the D4 word") {
    auto sys = root_system("D4");
    Word w = parse_word("3 2 1 4 3 2 1 4 3 2 1 4", 4);
    auto roots = names(*sys, roots_of_word(*sys, w));
    CHECK(roots.size() == 12);
    CHECK(roots[0] == "{3|-4}");
    CHECK(roots[1] == "{2|-4}");
    CHECK(roots[2] == "{1|-4}");
}

TEST_CASE("small words") {
    auto a2 = root_system("A2");
    CHECK(roots_of_word(*a2, Word{1}) == std::vector<RootId>{1});
    CHECK(!is_reduced(*a2, Word{0, 0}));
    CHECK_THROWS_AS(roots_of_word(*a2, Word{0, 0}), NotReduced);
    CHECK(is_reduced(*a2, Word{0, 1, 0}));
}

TEST_CASE("longest words of every type") {
    for (const char* name : {"A1", "A2", "A3", "A6", "A9", "D4", "D5", "D6", "D8", "E6", "E7", "E8"}) {
        auto sys = root_system(name);
        Word w = longest_word(*sys);
        CAPTURE(name);
        CHECK(static_cast<int>(w.size()) == sys->size());
        CHECK(is_reduced(*sys, w));
    }
    std::mt19937 rng(7);
    for (const char* name : {"A4", "D5", "E6"})
        for (int k = 0; k < 5; ++k) {
            auto sys = root_system(name);
            Word w = random_longest_word(*sys, rng);
            CHECK(static_cast<int>(w.size()) == sys->size());
            CHECK(is_reduced(*sys, w));
        }
}

TEST_CASE("heap covers match the definition") {
    std::mt19937 rng(11);
    auto a2 = root_system("A2");
    CommClass c(a2, Word{0, 1, 0});
    CHECK(c.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    for (const char* name : {"A3", "A5", "D4", "D5", "E6"})
        for (int k = 0; k < 4; ++k) {
            auto sys = root_system(name);
            Word w = random_longest_word(*sys, rng);
            CommClass cc(sys, w);
            CHECK(cc.covers() == heap_covers(*sys, w));
        }
}

TEST_CASE("heap of the D4 word") {
    auto sys = root_system("D4");
    CommClass c(sys, parse_word("3 2 1 4 3 2 1 4 3 2 1 4", 4));
    CHECK(c.length() == 12);
    CHECK(c.is_longest());
    CHECK(c.reaches(2, 6));
    CHECK(c.reaches(6, 10));
    CHECK(!c.reaches(2, 3));
    CHECK(!c.reaches(3, 2));
}

TEST_CASE("small classes") {
    auto a2 = root_system("A2");
    CHECK(enumerate_class(CommClass(a2, Word{0, 1}), 10).size() == 1);
    auto a5 = root_system("A5");
    auto two = enumerate_class(CommClass(a5, Word{0, 2}), 10);
    CHECK(two == std::vector<Word>{{0, 2}, {2, 0}});
    CommClass ab(a5, Word{0, 2});
    CHECK(!ab.comparable(ab.root_at(0), ab.root_at(1)));
    CHECK_THROWS_AS(enumerate_class(CommClass(root_system("D4"), longest_word(*root_system("D4"))), 2),
                    ClassTooLarge);
}

TEST_CASE("class order equals order in every member") {
    std::mt19937 rng(3);
    for (const char* name : {"A3", "A4", "D4"})
        for (int k = 0; k < 3; ++k) {
            auto sys = root_system(name);
            CommClass c(sys, random_longest_word(*sys, rng));
            auto members = enumerate_class(c, 100000);
            std::vector<std::vector<int>> pos;
            for (const auto& w : members) {
                pos.push_back(oracle::positions(*sys, w));
                // same root set in every member
                CHECK(std::count_if(pos.back().begin(), pos.back().end(), [](int p) { return p >= 0; }) ==
                      sys->size());
            }
            for (int a = 0; a < sys->size(); ++a)
                for (int b = 0; b < sys->size(); ++b) {
                    bool always = a != b;
                    for (const auto& p : pos) always = always && p[a] < p[b];
                    CHECK(c.precedes(a, b) == always);
                    CHECK(c.below(b)[a] == c.precedes(a, b));
                    CHECK(c.above(a)[b] == c.precedes(a, b));
                }
        }
}

TEST_CASE("class enumeration is deterministic and closed") {
    auto sys = root_system("D4");
    CommClass c(sys, parse_word("3 2 1 4 3 2 1 4 3 2 1 4", 4));
    auto members = enumerate_class(c, 100000);
    CHECK(std::is_sorted(members.begin(), members.end()));
    CHECK(members == enumerate_class(CommClass(sys, members.back()), 100000));
    for (const auto& w : members) CHECK(is_reduced(*sys, w));
}

TEST_CASE("convexity of reduced words of the longest element") {
    std::mt19937 rng(5);
    for (const char* name : {"A4", "A5", "D4", "D5"})
        for (int k = 0; k < 5; ++k) {
            auto sys = root_system(name);
            auto pos = oracle::positions(*sys, random_longest_word(*sys, rng));
            for (int a = 0; a < sys->size(); ++a)
                for (int b = 0; b < sys->size(); ++b) {
                    RootId s = sys->sum(a, b);
                    if (s < 0 || pos[a] > pos[b]) continue;
                    CHECK(pos[a] < pos[s]);
                    CHECK(pos[s] < pos[b]);
                }
        }
}

TEST_CASE("roots outside the word") {
    auto a3 = root_system("A3");
    CommClass c(a3, Word{0, 1});
    CHECK(c.contains(0));
    CHECK(!c.contains(2));
    CHECK(c.position(2) == -1);
    CHECK_THROWS_AS(c.require(2), RootNotInWord);
}
