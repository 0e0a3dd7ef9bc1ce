// Sectional paths, swings and the boundary enumerations of A/D AR quivers.
#include <algorithm>

#include "arq/arquiver.hpp"

namespace arq {

namespace {

// residue of the next vertex along an S or N arrow, or -1
std::vector<int> steps(const RootSystem& sys, int i, char dir) {
    const int n = sys.rank();
    std::vector<int> next;
    if (sys.kind() == Kind::A) {
        if (dir == 'S' && i + 1 < n) next.push_back(i + 1);
        if (dir == 'N' && i > 0) next.push_back(i - 1);
        return next;
    }
    // type D, 0-based: levels 0..n-3 chain, n-2 and n-1 are the fork
    if (dir == 'S') {
        if (i <= n - 3) next.push_back(i + 1);
        if (i == n - 3) next.push_back(n - 1);
    } else {
        if (i >= 1 && i <= n - 2) next.push_back(i - 1);
        if (i == n - 1) next.push_back(n - 3);
    }
    return next;
}

std::vector<std::vector<RootId>> maximal_paths(const ARQuiver& g, char dir) {
    const RootSystem& sys = g.system();
    auto successors = [&](RootId r) {
        std::vector<RootId> out;
        for (int j : steps(sys, g.residue(r), dir))
            if (auto h = g.label(j, g.coordinate(r) + 1)) out.push_back(*h);
        return out;
    };
    RootSet has_pred;
    for (const auto& v : g.vertices())
        for (RootId h : successors(v.root)) has_pred.set(h);
    std::vector<std::vector<RootId>> paths;
    std::vector<RootId> cur;
    std::function<void(RootId)> walk = [&](RootId r) {
        cur.push_back(r);
        auto next = successors(r);
        if (next.empty()) paths.push_back(cur);
        for (RootId h : next) walk(h);
        cur.pop_back();
    };
    // vertices are stored with p descending; start from the left end instead
    for (auto it = g.vertices().rbegin(); it != g.vertices().rend(); ++it)
        if (!has_pred[it->root]) walk(it->root);
    return paths;
}

// signed e-summands of a D-type root, 1-based with sign
std::vector<int> summands(const RootSystem& sys, RootId r) {
    auto e = sys.epsilon(sys.root(r));
    std::vector<int> s;
    for (int i = 0; i < sys.rank(); ++i)
        if (e[i] != 0) s.push_back(e[i] > 0 ? i + 1 : -(i + 1));
    return s;
}

int shared_summand(const RootSystem& sys, const std::vector<RootId>& roots) {
    if (roots.size() < 2) return 0;
    auto common = summands(sys, roots[0]);
    for (size_t k = 1; k < roots.size(); ++k) {
        auto s = summands(sys, roots[k]);
        std::vector<int> keep;
        for (int x : common)
            if (std::find(s.begin(), s.end(), x) != s.end()) keep.push_back(x);
        common = keep;
    }
    return common.empty() ? 0 : common.front();
}

// A-type [a,b] endpoints, 1-based
std::pair<int, int> interval(const RootSystem& sys, RootId r) {
    auto s = sys.supp(r);
    return {s.front() + 1, s.back() + 1};
}

}  // namespace

StructureReport structure_report(const ARQuiver& g) {
    const RootSystem& sys = g.system();
    if (sys.kind() == Kind::E) throw UnsupportedType("structure report covers types A and D only");
    const int n = sys.rank();
    StructureReport rep;

    for (char dir : {'S', 'N'}) {
        for (auto& roots : maximal_paths(g, dir)) {
            SectionalPath sp{dir, roots, 0};
            if (sys.kind() == Kind::A) {
                auto [a, b] = interval(sys, roots.front());
                int shared = dir == 'N' ? a : b;
                for (RootId r : roots) {
                    auto [x, y] = interval(sys, r);
                    if ((dir == 'N' ? x : y) != shared) shared = 0;
                }
                sp.shared = shared;
            } else {
                sp.shared = shared_summand(sys, roots);
            }
            (dir == 'S' ? rep.s_paths : rep.n_paths).push_back(std::move(sp));
        }
    }

    auto by_p_desc = [&](int res, bool skip_simple) {
        std::vector<RootId> out;
        for (const auto& v : g.vertices())
            if (v.residue == res && !(skip_simple && sys.is_simple(v.root) && v.root >= n - 2))
                out.push_back(v.root);
        return out;
    };

    if (sys.kind() == Kind::A) {
        rep.kappa = by_p_desc(0, false);
        rep.sigma = by_p_desc(n - 1, false);
        std::reverse(rep.sigma.begin(), rep.sigma.end());
        return rep;
    }

    // ta: the index in {n-1, n} whose e-summand marks exactly the fork residues
    for (int t : {n - 1, n}) {
        bool ok = true;
        for (const auto& v : g.vertices()) {
            auto s = summands(sys, v.root);
            bool has = std::find(s.begin(), s.end(), t) != s.end() ||
                       std::find(s.begin(), s.end(), -t) != s.end();
            bool fork = v.residue >= n - 2;
            if (has != fork) ok = false;
        }
        if (ok) rep.ta = t;
    }
    rep.ta_prime = rep.ta == n ? n - 1 : rep.ta == n - 1 ? n : 0;
    int diff = g.xi(n - 2) - g.xi(n - 1);
    rep.ta_from_xi = (diff == 2 || diff == -2) ? n - 1 : n;

    for (int a = 1; a <= n - 2; ++a) {
        Swing sw{a, {}, 0, 0, 0, false, false};
        for (const auto& v : g.vertices()) {
            auto s = summands(sys, v.root);
            if (std::find(s.begin(), s.end(), a) != s.end()) sw.roots.push_back(v.root);
        }
        RootSet members;
        for (RootId r : sw.roots) members.set(r);
        sw.contains_simple = members[sys.simple(a - 1)];
        for (RootId r : sw.roots) {
            if (g.residue(r) != n - 2) continue;
            int u = g.coordinate(r);
            auto other = g.label(n - 1, u);
            if (!other || !members[*other]) continue;
            RootSet shape;
            shape.set(r);
            shape.set(*other);
            int lo = n - 1, hi = n - 1;
            for (int l = n - 3; l >= 0; --l) {
                auto x = g.label(l, u - (n - 2 - l));
                if (!x || !members[*x]) break;
                shape.set(*x);
                lo = l;
            }
            for (int l = n - 3; l >= 0; --l) {
                auto x = g.label(l, u + (n - 2 - l));
                if (!x || !members[*x]) break;
                shape.set(*x);
                hi = l;
            }
            sw.u = u;
            sw.r = lo + 1;
            sw.s = hi + 1;
            sw.well_formed = shape == members;
        }
        rep.swings.push_back(std::move(sw));
    }

    for (const auto& sp : rep.s_paths)
        if (g.residue(sp.roots.back()) < n - 2) rep.shallow.push_back(sp);
    for (const auto& sp : rep.n_paths)
        if (g.residue(sp.roots.front()) < n - 2) rep.shallow.push_back(sp);

    rep.sigma = by_p_desc(n - 2, true);
    for (RootId r : rep.sigma) {
        int idx = 0;
        for (int x : summands(sys, r))
            if (x > 0 && x <= n - 2) idx = x;
        rep.sigma_index.push_back(idx);
    }
    rep.kappa = by_p_desc(0, false);
    for (RootId r : rep.kappa) {
        int j = 0;
        for (int x : summands(sys, r)) {
            if (x < 0 && -x <= n - 2) j = x;
            else if (x == -rep.ta_prime) j = x;
        }
        if (j == 0)
            for (int x : summands(sys, r))
                if (x == rep.ta_prime) j = x;
        rep.kappa_index.push_back(j);
    }
    return rep;
}

}  // namespace arq
