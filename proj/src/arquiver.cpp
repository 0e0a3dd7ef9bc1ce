#include "arq/arquiver.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace arq {

DynkinQuiver::DynkinQuiver(SystemPtr sys, const std::vector<std::pair<int, int>>& arrows)
    : sys_(std::move(sys)), out_(sys_->rank(), 0u) {
    const int n = sys_->rank();
    std::set<std::pair<int, int>> want;
    for (auto [a, b] : sys_->edges()) want.emplace(std::min(a, b), std::max(a, b));
    std::set<std::pair<int, int>> got;
    for (auto [a, b] : arrows) {
        if (a < 0 || b < 0 || a >= n || b >= n || !sys_->adjacent(a, b))
            throw ParseError("arrow " + std::to_string(a + 1) + ">" + std::to_string(b + 1) +
                             " is not an edge of " + sys_->name());
        if (!got.emplace(std::min(a, b), std::max(a, b)).second)
            throw ParseError("edge " + std::to_string(a + 1) + "-" + std::to_string(b + 1) +
                             " oriented twice");
        out_[a] |= 1u << b;
    }
    if (got != want) throw ParseError("every edge of " + sys_->name() + " needs an orientation");
}

DynkinQuiver DynkinQuiver::parse(SystemPtr sys, std::string_view text) {
    std::vector<std::pair<int, int>> arrows;
    std::string s(text);
    for (char& ch : s)
        if (ch == ';' || ch == ' ') ch = ',';
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto pos = item.find_first_of("<>");
        if (pos == std::string::npos) throw ParseError("bad arrow '" + item + "'");
        int a, b;
        try {
            std::string lhs = item.substr(0, pos), rhs = item.substr(pos + 1);
            if (!rhs.empty() && (rhs[0] == '>' || rhs[0] == '-')) rhs = rhs.substr(1);
            if (!lhs.empty() && lhs.back() == '-') lhs.pop_back();
            size_t p1 = 0, p2 = 0;
            a = std::stoi(lhs, &p1);
            b = std::stoi(rhs, &p2);
            if (p1 != lhs.size() || p2 != rhs.size()) throw std::invalid_argument("junk");
        } catch (const std::exception&) {
            throw ParseError("bad arrow '" + item + "'");
        }
        if (item[pos] == '<') std::swap(a, b);
        arrows.emplace_back(a - 1, b - 1);
    }
    return DynkinQuiver(std::move(sys), arrows);
}

DynkinQuiver DynkinQuiver::monotone(SystemPtr sys) {
    std::vector<std::pair<int, int>> arrows;
    for (auto [a, b] : sys->edges()) {
        if (sys->graph_distance(0, a) < sys->graph_distance(0, b)) arrows.emplace_back(a, b);
        else arrows.emplace_back(b, a);
    }
    return DynkinQuiver(std::move(sys), arrows);
}

std::vector<DynkinQuiver> DynkinQuiver::all_orientations(SystemPtr sys) {
    const auto& edges = sys->edges();
    std::vector<DynkinQuiver> out;
    for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
        std::vector<std::pair<int, int>> arrows;
        for (size_t e = 0; e < edges.size(); ++e) {
            auto [a, b] = edges[e];
            if ((mask >> e) & 1u) arrows.emplace_back(b, a);
            else arrows.emplace_back(a, b);
        }
        out.emplace_back(sys, arrows);
    }
    return out;
}

bool DynkinQuiver::is_source(int i) const {
    for (int j : sys_->neighbors(i))
        if (arrow(j, i)) return false;
    return true;
}

bool DynkinQuiver::is_sink(int i) const { return out_[i] == 0; }

std::vector<std::pair<int, int>> DynkinQuiver::arrows() const {
    std::vector<std::pair<int, int>> a;
    for (auto [x, y] : sys_->edges()) {
        if (arrow(x, y)) a.emplace_back(x, y);
        else a.emplace_back(y, x);
    }
    return a;
}

DynkinQuiver DynkinQuiver::reflected(int i) const {
    auto out = out_;
    for (int j : sys_->neighbors(i)) {
        if (arrow(i, j)) {
            out[i] &= ~(1u << j);
            out[j] |= 1u << i;
        } else {
            out[j] &= ~(1u << i);
            out[i] |= 1u << j;
        }
    }
    return DynkinQuiver(sys_, std::move(out));
}

DynkinQuiver DynkinQuiver::reversed() const {
    std::vector<std::uint32_t> out(out_.size(), 0u);
    for (int i = 0; i < sys_->rank(); ++i)
        for (int j = 0; j < sys_->rank(); ++j)
            if (arrow(i, j)) out[j] |= 1u << i;
    return DynkinQuiver(sys_, std::move(out));
}

std::string DynkinQuiver::format() const {
    std::string s;
    for (auto [a, b] : arrows()) {
        if (!s.empty()) s += ',';
        s += std::to_string(a + 1) + ">" + std::to_string(b + 1);
    }
    return s;
}

Word coxeter_word(const DynkinQuiver& q) {
    const int n = q.system().rank();
    DynkinQuiver cur = q;
    std::vector<bool> used(n, false);
    Word w;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int i = 0; i < n && pick < 0; ++i)
            if (!used[i] && cur.is_source(i)) pick = i;
        used[pick] = true;
        w.push_back(pick);
        cur = cur.reflected(pick);
    }
    return w;
}

namespace {

RootId sum_of_nodes(const RootSystem& sys, const std::vector<bool>& nodes) {
    Weight w;
    for (int i = 0; i < sys.rank(); ++i)
        if (nodes[i]) w[i] = 1;
    return *sys.find(w);
}

std::vector<bool> closure(const DynkinQuiver& q, int i, bool forward) {
    const RootSystem& sys = q.system();
    std::vector<bool> seen(sys.rank(), false);
    std::deque<int> todo{i};
    seen[i] = true;
    while (!todo.empty()) {
        int u = todo.front();
        todo.pop_front();
        for (int v : sys.neighbors(u)) {
            bool step = forward ? q.arrow(u, v) : q.arrow(v, u);
            if (step && !seen[v]) {
                seen[v] = true;
                todo.push_back(v);
            }
        }
    }
    return seen;
}

}  // namespace

RootId gamma(const DynkinQuiver& q, int i) { return sum_of_nodes(q.system(), closure(q, i, false)); }

RootId theta(const DynkinQuiver& q, int i) { return sum_of_nodes(q.system(), closure(q, i, true)); }

std::vector<int> height_function(const DynkinQuiver& q) {
    const RootSystem& sys = q.system();
    const int n = sys.rank();
    std::vector<int> xi(n, 0);
    std::vector<bool> seen(n, false);
    std::deque<int> todo{0};
    seen[0] = true;
    while (!todo.empty()) {
        int u = todo.front();
        todo.pop_front();
        for (int v : sys.neighbors(u)) {
            if (seen[v]) continue;
            xi[v] = q.arrow(u, v) ? xi[u] - 1 : xi[u] + 1;
            seen[v] = true;
            todo.push_back(v);
        }
    }
    int s = 0;
    while (!q.is_source(s)) ++s;
    int shift = xi[s];
    for (auto& x : xi) x -= shift;
    return xi;
}

ARQuiver::ARQuiver(const DynkinQuiver& q) : quiver_(q) {
    const RootSystem& sys = q.system();
    const int n = sys.rank();
    xi_ = height_function(q);
    Word c = coxeter_word(q);
    auto tau_w = [&](Weight b) {
        for (size_t j = c.size(); j-- > 0;) b = sys.reflect(c[j], b);
        return b;
    };
    for (int i = 0; i < n; ++i) {
        Weight b = sys.root(gamma(q, i));
        for (int k = 0;; ++k) {
            auto r = sys.find(b);
            if (!r) break;
            verts_.push_back({i, xi_[i] - 2 * k, *r});
            b = tau_w(b);
        }
    }
    finish();
}

ARQuiver::ARQuiver(DynkinQuiver q, std::vector<ArVertex> verts) : quiver_(std::move(q)), verts_(std::move(verts)) {
    xi_ = height_function(quiver_);
    finish();
}

void ARQuiver::finish() {
    const RootSystem& sys = system();
    const int n = sys.rank();
    std::sort(verts_.begin(), verts_.end(), [](const ArVertex& a, const ArVertex& b) {
        if (a.p != b.p) return a.p > b.p;
        return a.residue < b.residue;
    });
    at_.clear();
    coord_.assign(sys.size(), {-1, 0});
    m_.assign(n, -1);
    for (const auto& v : verts_) {
        at_[{v.residue, v.p}] = v.root;
        coord_[v.root] = {v.residue, v.p};
        ++m_[v.residue];
    }
    reach_.assign(sys.size(), {});
    for (const auto& v : verts_) {  // p descending: heads are finished first
        for (int j : sys.neighbors(v.residue)) {
            auto it = at_.find({j, v.p + 1});
            if (it == at_.end()) continue;
            reach_[v.root].set(it->second);
            reach_[v.root] |= reach_[it->second];
        }
    }
}

std::optional<RootId> ARQuiver::label(int i, int p) const {
    auto it = at_.find({i, p});
    if (it == at_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::pair<RootId, RootId>> ARQuiver::arrows() const {
    std::vector<std::pair<RootId, RootId>> a;
    for (const auto& v : verts_)
        for (int j : system().neighbors(v.residue))
            if (auto h = label(j, v.p + 1)) a.emplace_back(v.root, *h);
    return a;
}

std::optional<RootId> ARQuiver::tau(RootId r) const {
    return label(coord_[r].first, coord_[r].second - 2);
}

std::optional<RootId> ARQuiver::tau_inverse(RootId r) const {
    return label(coord_[r].first, coord_[r].second + 2);
}

Word ARQuiver::reading() const {
    // slice by slice: tau-orbit index first, then the order of the coxeter word
    Word cox = coxeter_word(quiver_);
    std::vector<int> rank_in(cox.size());
    for (size_t k = 0; k < cox.size(); ++k) rank_in[cox[k]] = static_cast<int>(k);
    std::vector<ArVertex> vs = verts_;
    auto key = [&](const ArVertex& v) { return std::pair((xi_[v.residue] - v.p) / 2, rank_in[v.residue]); };
    std::sort(vs.begin(), vs.end(), [&](const ArVertex& a, const ArVertex& b) { return key(a) < key(b); });
    Word w;
    for (const auto& v : vs) w.push_back(v.residue);
    return w;
}

bool ARQuiver::is_reading(const std::vector<RootId>& order) const {
    if (order.size() != verts_.size()) return false;
    RootSet done;
    for (RootId r : order) {
        if (r < 0 || r >= system().size() || done[r] || coord_[r].first < 0) return false;
        // everything this root has a path to must already be read
        if ((reach_[r] & ~done).any()) return false;
        done.set(r);
    }
    return true;
}

void ARQuiver::for_each_reading(const std::function<bool(const std::vector<RootId>&)>& visit) const {
    const int total = static_cast<int>(verts_.size());
    std::vector<RootId> order;
    RootSet done;
    bool stop = false;
    std::function<void()> rec = [&] {
        if (stop) return;
        if (static_cast<int>(order.size()) == total) {
            if (!visit(order)) stop = true;
            return;
        }
        for (const auto& v : verts_) {
            if (done[v.root] || (reach_[v.root] & ~done).any()) continue;
            done.set(v.root);
            order.push_back(v.root);
            rec();
            order.pop_back();
            done.reset(v.root);
            if (stop) return;
        }
    };
    rec();
}

std::vector<Word> ARQuiver::adapted_words(std::size_t cap) const {
    std::vector<Word> out;
    for_each_reading([&](const std::vector<RootId>& order) {
        if (out.size() >= cap) throw EnumerationCapExceeded(cap);
        Word w;
        for (RootId r : order) w.push_back(coord_[r].first);
        out.push_back(std::move(w));
        return true;
    });
    return out;
}

CommClass ARQuiver::commutation_class() const { return CommClass(quiver_.system_ptr(), reading()); }

bool operator==(const ARQuiver& a, const ARQuiver& b) {
    if (!(a.quiver_ == b.quiver_) || a.verts_.size() != b.verts_.size()) return false;
    for (size_t k = 0; k < a.verts_.size(); ++k) {
        const auto &x = a.verts_[k], &y = b.verts_[k];
        if (x.residue != y.residue || x.p != y.p || x.root != y.root) return false;
    }
    return true;
}

ARQuiver reflect(const ARQuiver& g, int i) {
    const DynkinQuiver& q = g.quiver();
    const RootSystem& sys = q.system();
    if (!q.is_sink(i)) throw NotASink("node " + std::to_string(i + 1) + " is not a sink");
    const RootId ai = sys.simple(i);
    const int p = g.coordinate(ai);
    std::vector<ArVertex> verts;
    for (const auto& v : g.vertices()) {
        if (v.root == ai) continue;
        verts.push_back({v.residue, v.p, *sys.find(sys.reflect(i, sys.root(v.root)))});
    }
    verts.push_back({i, p + sys.dual_coxeter(), ai});
    DynkinQuiver rq = q.reflected(i);
    // renormalize so coordinates agree with the direct construction
    std::vector<int> xi = height_function(rq);
    int top = verts.back().p;  // the new source vertex sits at xi_i
    int shift = xi[i] - top;
    for (auto& v : verts) v.p += shift;
    return ARQuiver(std::move(rq), std::move(verts));
}

bool is_adapted(const RootSystem& sys, const Word& w, const DynkinQuiver& q) {
    DynkinQuiver cur = q;
    for (int letter : w) {
        if (letter < 0 || letter >= sys.rank() || !cur.is_source(letter)) return false;
        cur = cur.reflected(letter);
    }
    return true;
}

std::optional<DynkinQuiver> find_quiver(const CommClass& c) {
    const RootSystem& sys = c.system();
    if (!c.is_longest()) return std::nullopt;
    const Word& w = c.word();
    std::vector<int> first(sys.rank(), static_cast<int>(w.size()));
    for (int k = static_cast<int>(w.size()); k-- > 0;) first[w[k]] = k;
    std::vector<std::pair<int, int>> arrows;
    for (auto [a, b] : sys.edges()) {
        if (first[a] < first[b]) arrows.emplace_back(a, b);
        else arrows.emplace_back(b, a);
    }
    DynkinQuiver q(c.system_ptr(), arrows);
    if (!is_adapted(sys, w, q)) return std::nullopt;
    return q;
}

}  // namespace arq
