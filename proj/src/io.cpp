#include "arq/io.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#ifndef ARQ_DEFAULT_FIXTURE_DIR
#define ARQ_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace arq {

json root_to_json(const RootSystem& sys, RootId r) {
    json a = json::array();
    for (int i = 0; i < sys.rank(); ++i) a.push_back(static_cast<int>(sys.root(r)[i]));
    return a;
}

RootId root_from_json(const RootSystem& sys, const json& j) {
    if (!j.is_array() || static_cast<int>(j.size()) != sys.rank()) throw ParseError("root must be an array of length " + std::to_string(sys.rank()));
    Weight w;
    for (int i = 0; i < sys.rank(); ++i) w[i] = static_cast<std::int8_t>(j[i].get<int>());
    auto r = sys.find(w);
    if (!r) throw NotARoot("not a positive root: " + j.dump());
    return *r;
}

json system_to_json(const RootSystem& sys) {
    json roots = json::array();
    for (int r = 0; r < sys.size(); ++r) roots.push_back(root_to_json(sys, r));
    return {{"kind", std::string(1, kind_letter(sys.kind()))}, {"rank", sys.rank()}, {"roots", roots}};
}

SystemPtr system_from_json(const json& j) {
    auto sys = root_system(parse_kind(j.at("kind").get<std::string>()), j.at("rank").get<int>());
    if (j.contains("roots")) {
        const auto& roots = j.at("roots");
        if (static_cast<int>(roots.size()) != sys->size()) throw ParseError("root count does not match the type");
        for (int r = 0; r < sys->size(); ++r)
            if (root_from_json(*sys, roots[r]) != r) throw ParseError("roots are not in canonical order");
    }
    return sys;
}

json heap_to_json(const CommClass& c) {
    json nodes = json::array();
    for (int k = 0; k < c.length(); ++k)
        nodes.push_back({{"pos", k + 1}, {"letter", c.word()[k] + 1}, {"root", root_to_json(c.system(), c.root_at(k))}});
    json covers = json::array();
    for (auto [p, q] : c.covers()) covers.push_back({p + 1, q + 1});
    return {{"nodes", nodes}, {"covers", covers}};
}

CommClass heap_from_json(const SystemPtr& sys, const json& j) {
    Word w;
    for (const auto& node : j.at("nodes")) w.push_back(node.at("letter").get<int>() - 1);
    CommClass c(sys, w);
    for (int k = 0; k < c.length(); ++k)
        if (root_from_json(*sys, j.at("nodes")[k].at("root")) != c.root_at(k)) throw ParseError("heap root labels disagree with the word");
    std::vector<std::pair<int, int>> covers;
    for (const auto& e : j.at("covers")) covers.emplace_back(e[0].get<int>() - 1, e[1].get<int>() - 1);
    std::sort(covers.begin(), covers.end());
    if (covers != c.covers()) throw ParseError("heap covers disagree with the word");
    return c;
}

json ar_to_json(const ARQuiver& g) {
    const RootSystem& sys = g.system();
    json xi = json::array();
    for (int i = 0; i < sys.rank(); ++i) xi.push_back(g.xi(i));
    json verts = json::array();
    for (const auto& v : g.vertices()) verts.push_back({{"i", v.residue + 1}, {"p", v.p}, {"root", root_to_json(sys, v.root)}});
    json arrows = json::array();
    for (auto [a, b] : g.arrows())
        arrows.push_back({{g.residue(a) + 1, g.coordinate(a)}, {g.residue(b) + 1, g.coordinate(b)}});
    return {{"system", sys.name()}, {"quiver", g.quiver().format()}, {"xi", xi}, {"vertices", verts}, {"arrows", arrows}};
}

ARQuiver ar_from_json(const SystemPtr& sys, const json& j) {
    ARQuiver g(DynkinQuiver::parse(sys, j.at("quiver").get<std::string>()));
    const auto& verts = j.at("vertices");
    if (verts.size() != g.vertices().size()) throw ParseError("vertex count disagrees with the quiver");
    for (const auto& v : verts) {
        auto r = g.label(v.at("i").get<int>() - 1, v.at("p").get<int>());
        if (!r || *r != root_from_json(*sys, v.at("root"))) throw ParseError("vertex labels disagree with the quiver");
    }
    return g;
}

json sequence_to_json(const CommClass& c, const RootSequence& m) {
    json parts = json::array();
    std::vector<RootSequence::Part> ps = m.parts();
    std::sort(ps.begin(), ps.end(), [&](const auto& a, const auto& b) { return c.position(a.root) < c.position(b.root); });
    for (const auto& p : ps)
        parts.push_back({{"root", root_to_json(c.system(), p.root)}, {"name", c.system().format_root(p.root)}, {"count", p.count}});
    return {{"text", format_sequence(c, m)}, {"parts", parts}};
}

RootSequence sequence_from_json(const RootSystem& sys, const json& j) {
    std::vector<RootSequence::Part> parts;
    for (const auto& p : j.at("parts")) parts.push_back({root_from_json(sys, p.at("root")), p.at("count").get<int>()});
    return RootSequence(parts);
}

json polynomial_to_json(int k, int l, const DistancePolynomial& d, bool correction) {
    json factors = json::array();
    for (auto [t, m] : d.factors) factors.push_back({{"t", t}, {"mult", m}});
    return {{"k", k + 1}, {"l", l + 1}, {"factors", factors}, {"correction", correction}, {"text", format_polynomial(d)}};
}

DistancePolynomial polynomial_from_json(const json& j) {
    DistancePolynomial d;
    for (const auto& f : j.at("factors")) d.add(f.at("t").get<int>(), f.at("mult").get<int>());
    return d;
}

std::string ar_to_dot(const ARQuiver& g) {
    const RootSystem& sys = g.system();
    std::ostringstream os;
    os << "digraph ARQuiver {\n  rankdir=LR;\n  node [shape=plaintext];\n";
    auto id = [&](RootId r) { return "v" + std::to_string(g.residue(r) + 1) + "_" + std::to_string(g.coordinate(r) - 0) ; };
    auto safe = [](std::string s) {
        for (auto& ch : s)
            if (ch == '-') ch = 'm';
        return s;
    };
    for (int i = 0; i < sys.rank(); ++i) {
        os << "  { rank=same;";
        for (const auto& v : g.vertices())
            if (v.residue == i) os << ' ' << safe(id(v.root)) << ';';
        os << " }\n";
    }
    for (const auto& v : g.vertices())
        os << "  " << safe(id(v.root)) << " [label=\"" << sys.format_root(v.root) << "\", pos=\"" << v.p << ","
           << -(v.residue + 1) << "!\"];\n";
    for (auto [a, b] : g.arrows()) os << "  " << safe(id(a)) << " -> " << safe(id(b)) << ";\n";
    os << "}\n";
    return os.str();
}

std::string ar_to_text(const ARQuiver& g) {
    const RootSystem& sys = g.system();
    std::ostringstream os;
    os << sys.name() << " quiver " << g.quiver().format() << "\n";
    for (int i = 0; i < sys.rank(); ++i) {
        os << "residue " << i + 1 << " (xi=" << g.xi(i) << ", m=" << g.m(i) << "):";
        std::vector<ArVertex> row;
        for (const auto& v : g.vertices())
            if (v.residue == i) row.push_back(v);
        for (auto it = row.rbegin(); it != row.rend(); ++it) os << "  " << it->p << ":" << sys.format_root(it->root);
        os << "\n";
    }
    os << "reading: " << format_word(g.reading()) << "\n";
    return os.str();
}

std::string fixture_dir() {
    if (const char* env = std::getenv("ARQ_FIXTURE_DIR")) return env;
    return ARQ_DEFAULT_FIXTURE_DIR;
}

namespace {

std::vector<std::string> read_lines(const std::string& name, std::string& system, std::string& quiver) {
    std::string path = fixture_dir() + "/" + name;
    std::ifstream in(path);
    if (!in) throw FixtureMissing("fixture not found: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("# quiver ", 0) == 0) {
            std::string spec = line.substr(9);
            auto colon = spec.find(':');
            system = spec.substr(0, colon);
            quiver = spec.substr(colon + 1);
            continue;
        }
        if (line.empty() || line[0] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

}  // namespace

GridFixture load_grid(const std::string& name) {
    GridFixture f;
    for (const auto& line : read_lines(name + ".grid", f.system, f.quiver)) {
        std::istringstream is(line);
        GridFixture::Cell c;
        if (!(is >> c.residue >> c.column >> c.root)) throw ParseError("bad grid line: " + line);
        f.cells.push_back(c);
    }
    return f;
}

ReadingsFixture load_readings(const std::string& name) {
    ReadingsFixture f;
    for (const auto& line : read_lines(name + ".readings", f.system, f.quiver)) {
        std::istringstream is(line);
        std::vector<std::string> reading;
        std::string tok;
        while (is >> tok) reading.push_back(tok);
        f.readings.push_back(reading);
    }
    return f;
}

TableFixture load_table(const std::string& name) {
    TableFixture f;
    std::string system, quiver;
    for (const auto& line : read_lines(name + ".denominators", system, quiver)) {
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError("bad table line: " + line);
        TableFixture::Row row;
        std::istringstream is(line.substr(0, colon));
        std::string tok;
        while (is >> tok) {
            int k = 0, l = 0;
            char comma = 0;
            std::istringstream ts(tok);
            if (!(ts >> k >> comma >> l) || comma != ',') throw ParseError("bad index pair: " + tok);
            row.entries.emplace_back(k, l);
        }
        row.text = line.substr(colon + 1);
        row.text.erase(0, row.text.find_first_not_of(' '));
        f.rows.push_back(row);
    }
    return f;
}

std::vector<std::string> diff_grid(const GridFixture& f, const ARQuiver& g) {
    const RootSystem& sys = g.system();
    std::vector<std::string> out;
    if (f.cells.empty()) return {"fixture is empty"};
    int max_col = f.cells.front().column;
    for (const auto& c : f.cells) max_col = std::max(max_col, c.column);
    int shift = g.vertices().front().p - max_col;
    std::set<RootId> covered;
    for (const auto& c : f.cells) {
        std::string where = "(" + std::to_string(c.residue) + "," + std::to_string(c.column) + ")";
        RootId want;
        try {
            want = sys.parse_root(c.root);
        } catch (const Error& e) {
            out.push_back(where + ": fixture label " + c.root + " is not a root");
            continue;
        }
        auto got = g.label(c.residue - 1, c.column + shift);
        if (!got) {
            out.push_back(where + ": no vertex, fixture has " + c.root);
        } else if (*got != want) {
            out.push_back(where + ": fixture " + c.root + ", computed " + sys.format_root(*got));
        } else {
            covered.insert(*got);
        }
    }
    for (const auto& v : g.vertices())
        if (!covered.count(v.root) && out.empty())
            out.push_back("(" + std::to_string(v.residue + 1) + "," + std::to_string(v.p - shift) +
                          "): computed " + sys.format_root(v.root) + " missing from fixture");
    return out;
}

}  // namespace arq
