#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "arq/arquiver.hpp"
#include "arq/denom.hpp"
#include "arq/io.hpp"
#include "arq/seqcalc.hpp"

using namespace arq;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kCap = 3 };

struct Options {
    std::string type, orient, word, quiver, format, out, pair, gamma, lhs, rhs, kind = "coarse";
    int rank = 0;
    bool all_orientations = false;
    std::size_t cap_class = 1'000'000, cap_partitions = kDefaultPartitionCap;
};

class UsageError : public Error {
public:
    using Error::Error;
};

struct Target {
    SystemPtr sys;
    std::optional<DynkinQuiver> quiver;
    Word word;

    CommClass comm_class() const {
        if (quiver) return ARQuiver(*quiver).commutation_class();
        return CommClass(sys, word);
    }
};

SystemPtr system_of(const Options& o) {
    if (o.type.empty()) throw UsageError("--type is required");
    bool has_rank = o.type.size() > 1;
    if (has_rank && o.rank) throw UsageError("give the rank either in --type or in --rank");
    if (!has_rank && !o.rank) throw UsageError("--rank is required");
    return has_rank ? root_system(o.type) : root_system(parse_kind(o.type), o.rank);
}

Target target_of(const Options& o) {
    Target t;
    if (!o.quiver.empty()) {
        auto colon = o.quiver.find(':');
        if (colon == std::string::npos) throw UsageError("--quiver expects SYSTEM:SPEC, e.g. D4:3>2,2>1,2>4");
        t.sys = root_system(o.quiver.substr(0, colon));
        std::string rest = o.quiver.substr(colon + 1);
        if (rest.find_first_of("<>") != std::string::npos || t.sys->rank() == 1)
            t.quiver = DynkinQuiver::parse(t.sys, rest);
        else
            t.word = parse_word(rest, t.sys->rank());
        return t;
    }
    t.sys = system_of(o);
    if (!o.word.empty()) {
        t.word = parse_word(o.word, t.sys->rank());
    } else if (!o.orient.empty() || t.sys->rank() == 1) {
        t.quiver = DynkinQuiver::parse(t.sys, o.orient);
    } else {
        throw UsageError("give --orient, --word or --quiver");
    }
    return t;
}

DynkinQuiver quiver_of(const Options& o) {
    Target t = target_of(o);
    if (!t.quiver) throw UsageError("this command needs a quiver, not a word");
    return *t.quiver;
}

std::vector<DynkinQuiver> quivers_of(const Options& o) {
    if (o.all_orientations) return DynkinQuiver::all_orientations(system_of(o));
    return {quiver_of(o)};
}

RootSequence sequence_arg(const RootSystem& sys, std::string text) {
    if (text.empty()) throw UsageError("missing sequence");
    if (text.front() != '(') text = "(" + text + ")";
    return parse_sequence(sys, text);
}

std::pair<RootId, RootId> pair_arg(const RootSystem& sys, const std::string& text) {
    auto m = sequence_arg(sys, text);
    if (!m.is_pair()) throw UsageError("--pair needs two distinct roots");
    return {m.parts()[0].root, m.parts()[1].root};
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (path.empty()) return;
        file_.open(path);
        if (!file_) throw UsageError("cannot write " + path);
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (o.format == f) return;
    throw UsageError("unsupported --format " + o.format);
}

int cmd_show(const Options& o) {
    ARQuiver g(quiver_of(o));
    Output out(o.out);
    if (o.format == "dot") out.stream() << ar_to_dot(g);
    else if (o.format == "json") out.stream() << ar_to_json(g).dump(2) << "\n";
    else if (o.format == "text") out.stream() << ar_to_text(g);
    else throw UsageError("unsupported --format " + o.format);
    return kOk;
}

int cmd_word(const std::string& what, const Options& o) {
    Target t = target_of(o);
    const RootSystem& sys = *t.sys;
    Output out(o.out);
    auto& os = out.stream();
    if (what == "check") {
        Word w = t.quiver ? t.comm_class().word() : t.word;
        bool reduced = is_reduced(sys, w);
        os << "reduced: " << (reduced ? "yes" : "no") << "\n";
        if (!reduced) return kMismatch;
        CommClass c(t.sys, w);
        os << "longest: " << (c.is_longest() ? "yes" : "no") << "\n";
        if (c.is_longest()) {
            auto q = find_quiver(c);
            os << "adapted quiver: " << (q ? q->format() : "none") << "\n";
        }
        return kOk;
    }
    CommClass c = t.comm_class();
    if (what == "roots") {
        require_format(o, {"text", "json"});
        if (o.format == "json") {
            json a = json::array();
            for (RootId r : c.roots_in_order()) a.push_back(root_to_json(sys, r));
            os << a.dump() << "\n";
        } else {
            for (int k = 0; k < c.length(); ++k) os << k + 1 << " " << sys.format_root(c.root_at(k)) << "\n";
        }
    } else if (what == "heap") {
        require_format(o, {"text", "json"});
        if (o.format == "json") {
            os << heap_to_json(c).dump(2) << "\n";
        } else {
            os << "word: " << format_word(c.word()) << "\n";
            for (auto [p, q] : c.covers())
                os << p + 1 << " " << sys.format_root(c.root_at(p)) << " -> " << q + 1 << " "
                   << sys.format_root(c.root_at(q)) << "\n";
        }
    } else if (what == "class") {
        auto words = enumerate_class(c, o.cap_class);
        for (const auto& w : words) os << format_word(w) << "\n";
        os << "# " << words.size() << " words\n";
    }
    return kOk;
}

int cmd_order(const Options& o) {
    Target t = target_of(o);
    const RootSystem& sys = *t.sys;
    CommClass c = t.comm_class();
    bool result = false;
    if (o.kind == "total" || o.kind == "partial") {
        RootId a = sys.parse_root(o.lhs), b = sys.parse_root(o.rhs);
        result = o.kind == "total" ? total_less(c, a, b) : partial_less(c, a, b);
    } else if (o.kind == "bilex" || o.kind == "coarse") {
        auto a = sequence_arg(sys, o.lhs), b = sequence_arg(sys, o.rhs);
        result = o.kind == "bilex" ? bilex_less(c, a, b) : coarse_less(c, a, b);
    } else {
        throw UsageError("unknown --kind " + o.kind);
    }
    Output out(o.out);
    out.stream() << (result ? "true" : "false") << "\n";
    return kOk;
}

json pair_json(const CommClass& c, RootPair p) { return format_sequence(c, RootSequence::of({p.alpha, p.beta})); }

int cmd_pair(const std::string& what, const Options& o) {
    require_format(o, {"text", "json"});
    Target t = target_of(o);
    const RootSystem& sys = *t.sys;
    SequenceCalculus calc(t.comm_class(), o.cap_partitions);
    const CommClass& c = calc.comm_class();
    Output out(o.out);
    auto& os = out.stream();
    bool as_json = o.format == "json";
    json j;

    if (what == "radius") {
        if (o.gamma.empty()) throw UsageError("--gamma is required");
        RootId g = sys.parse_root(o.gamma);
        int r = calc.radius(g);
        if (as_json) {
            json pairs = json::array();
            for (auto p : calc.radius_pairs(g)) {
                pairs.push_back({{"pair", pair_json(c, p)}, {"dist", calc.dist(p.alpha, p.beta)}});
            }
            j = {{"gamma", sys.format_root(g)}, {"radius", r}, {"mul", sys.mul(g)}, {"pairs", pairs}};
        } else {
            os << r << "\n";
        }
    } else {
        if (o.pair.empty()) throw UsageError("--pair is required");
        auto [a, b] = pair_arg(sys, o.pair);
        RootPair p = calc.make_pair(a, b);
        j["pair"] = sequence_to_json(c, calc.as_sequence(p));
        if (what == "socle") {
            auto s = calc.socle(a, b);
            j["unique"] = s.unique();
            json cands = json::array();
            for (const auto& m : s.candidates) cands.push_back(sequence_to_json(c, m));
            j[s.unique() ? "socle" : "candidates"] = s.unique() ? cands[0] : cands;
            if (!as_json) {
                if (s.unique()) {
                    os << format_sequence(c, s.candidates[0]) << "\n";
                } else {
                    os << "undefined: " << s.candidates.size() << " simple sequences\n";
                    for (const auto& m : s.candidates) os << format_sequence(c, m) << "\n";
                }
            }
        } else if (what == "dist") {
            int d = calc.dist(a, b);
            json chain = json::array();
            for (auto q : calc.dist_chain(a, b)) chain.push_back(pair_json(c, q));
            j["dist"] = d;
            j["chain"] = chain;
            if (!as_json) os << d << "\n";
        } else if (what == "gdist") {
            int d = calc.gdist(calc.as_sequence(p));
            j["gdist"] = d;
            if (!as_json) os << d << "\n";
        } else if (what == "len") {
            auto nb = calc.good_neighbors(p);
            json arr = json::array();
            for (auto q : nb) arr.push_back(pair_json(c, q));
            j["len"] = nb.size();
            j["good_neighbors"] = arr;
            if (!as_json) {
                os << nb.size() << "\n";
                for (auto q : nb) os << format_sequence(c, calc.as_sequence(q)) << "\n";
            }
        }
    }
    if (as_json) os << j.dump(2) << "\n";
    return kOk;
}

std::string p_star(const RootSystem& sys) {
    if (sys.kind() == Kind::E && sys.rank() == 6) return "q^12";
    return "";
}

int cmd_denom(const std::string& what, const Options& o) {
    Output out(o.out);
    auto& os = out.stream();
    if (what == "verify") {
        int bad = 0, count = 0;
        for (auto& q : quivers_of(o)) {
            ++count;
            for (const auto& m : verify_denominator(q)) {
                ++bad;
                os << q.format() << " (" << m.k + 1 << "," << m.l + 1 << "): computed " << format_polynomial(m.computed)
                   << ", expected " << format_polynomial(m.expected) << "\n";
            }
        }
        os << count << " quivers, " << bad << " mismatches\n";
        return bad ? kMismatch : kOk;
    }
    require_format(o, {"text", "json", "latex"});
    SystemPtr sys = system_of(o);
    std::vector<DynkinQuiver> qs =
        o.all_orientations ? DynkinQuiver::all_orientations(sys)
                           : std::vector<DynkinQuiver>{o.orient.empty() ? DynkinQuiver::all_orientations(sys).front()
                                                                        : DynkinQuiver::parse(sys, o.orient)};
    auto table = conjecture_table(qs.front());
    int dependent = 0;
    for (size_t k = 1; k < qs.size(); ++k) {
        auto other = conjecture_table(qs[k]);
        for (size_t i = 0; i < table.size(); ++i)
            if (!(other[i].poly == table[i].poly)) ++dependent;
    }
    bool conjectural = sys->kind() == Kind::E;
    if (o.format == "json") {
        json rows = json::array();
        for (const auto& e : table) rows.push_back(polynomial_to_json(e.k, e.l, e.poly, e.correction));
        json j = {{"system", sys->name()}, {"conjectural", conjectural}, {"orientations", qs.size()}, {"table", rows}};
        if (!p_star(*sys).empty()) j["p_star"] = p_star(*sys);
        os << j.dump(2) << "\n";
    } else if (o.format == "latex") {
        os << "\\begin{align*}\n";
        for (size_t i = 0; i < table.size(); ++i) {
            const auto& e = table[i];
            os << "& d_{" << e.k + 1 << "," << e.l + 1 << "}(z)=" << format_polynomial_latex(e.poly)
               << (i + 1 < table.size() ? " \\\\\n" : "\n");
        }
        os << "\\end{align*}\n";
    } else {
        os << (conjectural ? "conjectural " : "") << "denominators for " << sys->name();
        if (!p_star(*sys).empty()) os << " (p* = " << p_star(*sys) << ")";
        os << ", * marks the correction factor\n";
        for (const auto& e : table)
            os << "d" << e.k + 1 << "," << e.l + 1 << (e.correction ? "*" : " ") << " = " << format_polynomial(e.poly) << "\n";
    }
    if (dependent) {
        std::cerr << dependent << " entries depend on the orientation\n";
        return kMismatch;
    }
    return kOk;
}

int cmd_verify(const std::string& what, const Options& o) {
    Output out(o.out);
    auto& os = out.stream();
    int bad = 0;
    long checked = 0;
    if (what == "fixtures") {
        for (const char* name : {"e6", "e7", "e8"}) {
            auto f = load_grid(name);
            auto diff = diff_grid(f, ARQuiver(DynkinQuiver::parse(root_system(f.system), f.quiver)));
            os << name << ".grid: " << (diff.empty() ? "ok" : "MISMATCH") << "\n";
            for (const auto& d : diff) os << "  " << d << "\n";
            bad += static_cast<int>(diff.size());
            ++checked;
        }
        for (const char* name : {"a5", "d4"}) {
            auto f = load_readings(name);
            auto sys = root_system(f.system);
            ARQuiver g(DynkinQuiver::parse(sys, f.quiver));
            int wrong = 0;
            for (const auto& reading : f.readings) {
                std::vector<RootId> roots;
                for (const auto& r : reading) roots.push_back(sys->parse_root(r));
                if (!g.is_reading(roots)) ++wrong;
            }
            os << name << ".readings: " << (wrong ? "MISMATCH" : "ok") << "\n";
            bad += wrong;
            ++checked;
        }
        return bad ? kMismatch : kOk;
    }
    for (auto& q : quivers_of(o)) {
        ARQuiver g(q);
        const RootSystem& sys = g.system();
        if (what == "denominators") {
            auto m = verify_denominator(q);
            ++checked;
            if (!m.empty()) {
                ++bad;
                os << q.format() << ": " << m.size() << " mismatched entries\n";
            }
            continue;
        }
        SequenceCalculus calc(g.commutation_class(), o.cap_partitions);
        if (what == "rds-mul") {
            for (RootId r = sys.rank(); r < sys.size(); ++r, ++checked) {
                int rds = calc.radius(r);
                if (rds != sys.mul(r)) {
                    ++bad;
                    os << q.format() << " " << sys.format_root(r) << ": radius " << rds << ", mul " << sys.mul(r) << "\n";
                }
            }
        } else if (what == "dist-bound") {
            if (sys.kind() == Kind::E) throw UsageError("dist-bound applies to types A and D");
            int bound = sys.kind() == Kind::A ? 1 : 2;
            for (RootId a = 0; a < sys.size(); ++a)
                for (RootId b = a + 1; b < sys.size(); ++b, ++checked) {
                    int d = calc.dist(a, b);
                    if (d > bound) {
                        ++bad;
                        os << q.format() << " (" << sys.format_root(a) << "," << sys.format_root(b) << "): dist " << d << "\n";
                    }
                }
        }
    }
    os << what << ": " << checked << " checked, " << bad << " mismatches\n";
    return bad ? kMismatch : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"AR quivers, commutation classes and the sequence calculus of Dynkin types"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--type", o.type, "A, D or E, optionally with the rank (E6)");
    app.add_option("--rank", o.rank, "rank");
    app.add_option("--orient", o.orient, "orientation, e.g. 1>2,3>2");
    app.add_option("--word", o.word, "reduced word, 1-based letters");
    app.add_option("--quiver,--class", o.quiver, "SYSTEM:orientation or SYSTEM:word");
    app.add_option("--format", o.format, "text, json, dot or latex");
    app.add_option("--out", o.out, "write to a file");
    app.add_option("--cap-class", o.cap_class, "class enumeration cap")->check(CLI::PositiveNumber);
    app.add_option("--cap-partitions", o.cap_partitions, "vector partition cap")->check(CLI::PositiveNumber);
    app.add_flag("--all-orientations", o.all_orientations, "sweep every orientation");

    auto* show = app.add_subcommand("show", "print the AR quiver");

    std::string action;
    auto* word = app.add_subcommand("word", "roots, reducedness, heap and class of a word");
    word->add_option("action", action, "roots|check|heap|class")
        ->required()
        ->check(CLI::IsMember({"roots", "check", "heap", "class"}));

    auto* order = app.add_subcommand("order", "compare roots or sequences");
    order->add_option("action", action, "cmp")->required()->check(CLI::IsMember({"cmp"}));
    order->add_option("--kind", o.kind, "total|partial|bilex|coarse");
    order->add_option("--lhs", o.lhs)->required();
    order->add_option("--rhs", o.rhs)->required();

    auto* pair = app.add_subcommand("pair", "socle, distances and radius");
    pair->add_option("action", action, "socle|dist|gdist|len|radius")
        ->required()
        ->check(CLI::IsMember({"socle", "dist", "gdist", "len", "radius"}));
    pair->add_option("--pair", o.pair, "two roots, e.g. {2|-4},{1|2}");
    pair->add_option("--gamma", o.gamma, "root for radius");

    auto* denom = app.add_subcommand("denom", "distance polynomials and denominators");
    denom->add_option("action", action, "verify|table")->required()->check(CLI::IsMember({"verify", "table"}));

    auto* verify = app.add_subcommand("verify", "property sweeps");
    verify->add_option("action", action, "rds-mul|dist-bound|denominators|fixtures")
        ->required()
        ->check(CLI::IsMember({"rds-mul", "dist-bound", "denominators", "fixtures"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    if (o.format.empty()) o.format = *show ? "dot" : "text";
    try {
        if (*show) return cmd_show(o);
        if (*word) return cmd_word(action, o);
        if (*order) return cmd_order(o);
        if (*pair) return cmd_pair(action, o);
        if (*denom) return cmd_denom(action, o);
        if (*verify) return cmd_verify(action, o);
    } catch (const EnumerationCapExceeded& e) {
        std::cerr << "arq: " << e.what() << "\n";
        return kCap;
    } catch (const ClassTooLarge& e) {
        std::cerr << "arq: " << e.what() << "\n";
        return kCap;
    } catch (const WellDefinednessViolation& e) {
        std::cerr << "arq: " << e.what() << "\n";
        return kMismatch;
    } catch (const Error& e) {
        std::cerr << "arq: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
