#include "arq/denom.hpp"

#include <algorithm>
#include <cstdlib>
#include <regex>

namespace arq {

int DistancePolynomial::degree() const {
    int d = 0;
    for (auto [t, m] : factors) d += m;
    return d;
}

namespace {

std::string factor_text(int t, bool latex) {
    // z - (-q)^t is z - q^t for even t and z + q^t for odd t
    std::string sign = t % 2 == 0 ? "-" : "+";
    std::string power = latex ? "q^{" + std::to_string(t) + "}" : "q^" + std::to_string(t);
    return "(z" + sign + power + ")";
}

std::string format_any(const DistancePolynomial& d, bool latex) {
    if (d.factors.empty()) return "1";
    std::string s;
    for (auto [t, m] : d.factors) {
        s += factor_text(t, latex);
        if (m > 1) s += latex ? "^{" + std::to_string(m) + "}" : "^" + std::to_string(m);
    }
    return s;
}

}  // namespace

std::string format_polynomial(const DistancePolynomial& d) { return format_any(d, false); }
std::string format_polynomial_latex(const DistancePolynomial& d) { return format_any(d, true); }

DistancePolynomial parse_polynomial(const std::string& text) {
    DistancePolynomial d;
    if (text == "1") return d;
    static const std::regex factor(R"(\(z([-+])q\^\{?(\d+)\}?\)(?:\^\{?(\d+)\}?)?)");
    std::string rest = text;
    rest.erase(std::remove(rest.begin(), rest.end(), ' '), rest.end());
    auto begin = std::sregex_iterator(rest.begin(), rest.end(), factor);
    size_t consumed = 0;
    for (auto it = begin; it != std::sregex_iterator(); ++it) {
        const auto& m = *it;
        if (static_cast<size_t>(m.position(0)) != consumed) throw ParseError("malformed polynomial '" + text + "'");
        consumed += m.length(0);
        int t = std::stoi(m[2]);
        bool minus = m[1] == "-";
        if (minus != (t % 2 == 0)) throw ParseError("sign does not match (z-(-q)^t) in '" + text + "'");
        d.add(t, m[3].matched ? std::stoi(m[3]) : 1);
    }
    if (consumed != rest.size()) throw ParseError("malformed polynomial '" + text + "'");
    return d;
}

std::vector<RootPair> pairs_at(const ARQuiver& g, int k, int l, int t) {
    std::vector<RootPair> out;
    for (const auto& u : g.vertices())
        for (const auto& v : g.vertices()) {
            if (u.p < v.p || (u.p == v.p && u.root >= v.root)) continue;
            if (u.p - v.p != t) continue;
            bool residues = (u.residue == k && v.residue == l) || (u.residue == l && v.residue == k);
            if (!residues) continue;
            // u has the larger coordinate and is read first
            if (g.path(v.root, u.root)) out.push_back({u.root, v.root});
        }
    return out;
}

int o_t(SequenceCalculus& calc, const ARQuiver& g, int k, int l, int t, bool check_all) {
    auto pairs = pairs_at(g, k, l, t);
    if (pairs.empty()) return 0;
    int value = calc.gdist(calc.as_sequence(pairs.front()));
    if (!check_all) return value;
    for (const auto& p : pairs)
        if (calc.gdist(calc.as_sequence(p)) != value)
            throw WellDefinednessViolation("pairs at (" + std::to_string(k + 1) + "," + std::to_string(l + 1) +
                                           ")[" + std::to_string(t) + "] disagree on gdist");
    return value;
}

DistanceTable::DistanceTable(const DynkinQuiver& q, bool check_all) : quiver_(q) {
    const RootSystem& sys = q.system();
    const int n = sys.rank();
    table_.assign(n, std::vector<std::map<int, int>>(n));
    ARQuiver g(q);
    SequenceCalculus calc(g.commutation_class());
    std::vector<std::vector<std::map<int, bool>>> seen(n, std::vector<std::map<int, bool>>(n));
    for (const auto& u : g.vertices())
        for (const auto& v : g.vertices()) {
            if (!g.path(v.root, u.root)) continue;
            int k = u.residue, l = v.residue, t = u.p - v.p;
            bool first = !seen[k][l].count(t);
            if (!first && !check_all) continue;
            int value = calc.gdist(calc.as_sequence(calc.make_pair(u.root, v.root)));
            if (first) {
                seen[k][l][t] = seen[l][k][t] = true;
                table_[k][l][t] = table_[l][k][t] = value;
            } else if (table_[k][l][t] != value) {
                throw WellDefinednessViolation("pairs at (" + std::to_string(k + 1) + "," + std::to_string(l + 1) +
                                               ")[" + std::to_string(t) + "] disagree on gdist for " + q.format());
            }
        }
}

int DistanceTable::value(int k, int l, int t) const {
    auto it = table_[k][l].find(t);
    return it == table_[k][l].end() ? 0 : it->second;
}

DistancePolynomial distance_polynomial(const DistanceTable& q, const DistanceTable& rev, int k, int l) {
    DistancePolynomial d;
    std::map<int, int> best = q.row(k, l);
    for (auto [t, v] : rev.row(k, l)) best[t] = std::max(best[t], v);
    for (auto [t, v] : best) d.add(t, v);
    return d;
}

DistancePolynomial distance_polynomial(const DynkinQuiver& q, int k, int l) {
    DistanceTable a(q), b(q.reversed());
    return distance_polynomial(a, b, k, l);
}

DistancePolynomial denominator_closed_form(Kind kind, int n, int k0, int l0) {
    if (k0 < 0 || l0 < 0 || k0 >= n || l0 >= n) throw ParseError("node index out of range");
    int k = k0 + 1, l = l0 + 1;
    DistancePolynomial d;
    if (kind == Kind::A) {
        int top = std::min({k, l, n + 1 - k, n + 1 - l});
        for (int x = 1; x <= top; ++x) d.add(std::abs(k - l) + 2 * x);
        return d;
    }
    if (kind != Kind::D) throw UnsupportedType("closed-form denominators exist for A and D only");
    if (k > l) std::swap(k, l);
    if (l <= n - 2) {
        for (int x = 1; x <= k; ++x) {
            d.add(l - k + 2 * x);
            d.add(2 * n - 2 - k - l + 2 * x);
        }
    } else if (k <= n - 2) {
        for (int x = 1; x <= k; ++x) d.add(n - k - 1 + 2 * x);
    } else if (k != l) {
        for (int x = 1; x <= (n - 1) / 2; ++x) d.add(4 * x);
    } else {
        for (int x = 1; x <= n / 2; ++x) d.add(4 * x - 2);
    }
    return d;
}

namespace {

DistancePolynomial corrected(const RootSystem& sys, DistancePolynomial d, int k, int l) {
    if (l == sys.star(k)) d.add(sys.dual_coxeter());
    return d;
}

}  // namespace

std::vector<DenominatorMismatch> verify_denominator(const DistanceTable& q, const DistanceTable& rev) {
    const RootSystem& sys = q.quiver().system();
    std::vector<DenominatorMismatch> out;
    for (int k = 0; k < sys.rank(); ++k)
        for (int l = 0; l < sys.rank(); ++l) {
            auto got = corrected(sys, distance_polynomial(q, rev, k, l), k, l);
            auto want = denominator_closed_form(sys.kind(), sys.rank(), k, l);
            if (!(got == want)) out.push_back({k, l, got, want});
        }
    return out;
}

std::vector<DenominatorMismatch> verify_denominator(const DynkinQuiver& q) {
    DistanceTable a(q), b(q.reversed());
    return verify_denominator(a, b);
}

std::vector<TableEntry> conjecture_table(const DistanceTable& q, const DistanceTable& rev) {
    const RootSystem& sys = q.quiver().system();
    std::vector<TableEntry> out;
    for (int k = 0; k < sys.rank(); ++k)
        for (int l = k; l < sys.rank(); ++l)
            out.push_back({k, l, corrected(sys, distance_polynomial(q, rev, k, l), k, l), l == sys.star(k)});
    return out;
}

std::vector<TableEntry> conjecture_table(const DynkinQuiver& q) {
    DistanceTable a(q), b(q.reversed());
    return conjecture_table(a, b);
}

}  // namespace arq
