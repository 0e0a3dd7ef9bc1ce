#include "arq/seqcalc.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace arq {

PartitionSearch::PartitionSearch(const RootSystem& sys, const RootSet& allowed) : sys_(sys) {
    for (int r = 0; r < sys.size(); ++r)
        if (allowed[r]) roots_.push_back(r);
    std::stable_sort(roots_.begin(), roots_.end(),
                     [&](RootId a, RootId b) { return sys.height(a) > sys.height(b); });
}

int PartitionSearch::reach(const Weight& r) {
    const int L = static_cast<int>(roots_.size());
    if (r.is_zero()) return L;
    auto it = memo_.find(r);
    if (it != memo_.end()) return it->second;
    int best = -1;
    for (int j = L - 1; j >= 0; --j) {
        const Weight& w = sys_.root(roots_[j]);
        if (!w.fits_in(r)) continue;
        if (reach(r - w) >= j) {
            best = j;
            break;
        }
    }
    memo_.emplace(r, best);
    return best;
}

bool PartitionSearch::exists(const Weight& w) {
    if (!w.nonnegative() || w.is_zero()) return false;
    return reach(w) >= 0;
}

void PartitionSearch::enumerate(const Weight& w, const PartitionOptions& opts,
                                const std::function<bool(const std::vector<RootId>&)>& visit,
                                const std::function<bool(RootId, const std::vector<RootId>&)>& admit) {
    if (!w.nonnegative() || w.is_zero()) return;
    const int L = static_cast<int>(roots_.size());
    std::vector<RootId> chosen;
    bool stop = false;
    std::function<void(int, const Weight&)> rec = [&](int k, const Weight& r) {
        if (r.is_zero()) {
            if (!visit(chosen)) stop = true;
            return;
        }
        if (opts.max_parts > 0 && static_cast<int>(chosen.size()) >= opts.max_parts) return;
        for (int j = k; j < L && !stop; ++j) {
            const Weight& x = sys_.root(roots_[j]);
            if (!x.fits_in(r)) continue;
            Weight rest = r - x;
            int next = opts.basic_only ? j + 1 : j;
            if (reach(rest) < next) continue;
            if (admit && !admit(roots_[j], chosen)) continue;
            chosen.push_back(roots_[j]);
            rec(next, rest);
            chosen.pop_back();
        }
    };
    rec(0, w);
}

std::vector<RootSequence> vector_partitions(const CommClass& c, const Weight& w, const PartitionOptions& opts) {
    PartitionSearch search(c.system(), c.roots());
    std::vector<RootSequence> out;
    search.enumerate(w, opts, [&](const std::vector<RootId>& parts) {
        if (out.size() >= opts.cap) throw EnumerationCapExceeded(opts.cap);
        out.push_back(RootSequence::from_roots(parts));
        return true;
    });
    return out;
}

SequenceCalculus::SequenceCalculus(CommClass c, std::size_t cap) : c_(std::move(c)), cap_(cap) {
    const int N = c_.system().size();
    simple_.assign(N, std::vector<signed char>(N, -1));
}

RootPair SequenceCalculus::make_pair(RootId a, RootId b) const {
    c_.require(a);
    c_.require(b);
    if (c_.position(a) > c_.position(b)) std::swap(a, b);
    return {a, b};
}

RootSet SequenceCalculus::open_interval(RootId a, RootId b) const { return c_.above(a) & c_.below(b); }

bool SequenceCalculus::is_simple_pair(RootId a, RootId b) {
    if (a == b) return true;
    auto p = make_pair(a, b);
    auto& slot = simple_[p.alpha][p.beta];
    if (slot >= 0) return slot;
    bool simple = true;
    if (c_.precedes(p.alpha, p.beta)) {
        // anything below a comparable pair lives strictly between its roots
        PartitionSearch search(system(), open_interval(p.alpha, p.beta));
        simple = !search.exists(system().root(p.alpha) + system().root(p.beta));
    }
    slot = simple ? 1 : 0;
    simple_[p.beta][p.alpha] = slot;
    return simple;
}

bool SequenceCalculus::is_simple(const RootSequence& m) {
    auto s = m.support();
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (!is_simple_pair(s[i], s[j])) return false;
    return true;
}

std::vector<RootPair> SequenceCalculus::pairs_of_weight(const Weight& w) const {
    const RootSystem& sys = system();
    std::vector<RootPair> out;
    for (int x = 0; x < sys.size(); ++x) {
        if (!c_.contains(x) || !sys.root(x).fits_in(w)) continue;
        auto y = sys.find(w - sys.root(x));
        if (!y || *y == x || !c_.contains(*y)) continue;
        if (c_.position(x) < c_.position(*y)) out.push_back({x, *y});
    }
    std::sort(out.begin(), out.end(), [&](const RootPair& a, const RootPair& b) {
        return c_.position(a.alpha) < c_.position(b.alpha);
    });
    return out;
}

namespace {

// longest chain ending at each element, over elements sorted by a linear extension
template <class Less>
std::vector<int> longest_chains(int count, Less less, std::vector<int>& parent) {
    std::vector<int> len(count, 1);
    parent.assign(count, -1);
    for (int u = 0; u < count; ++u)
        for (int v = 0; v < u; ++v)
            if (len[v] + 1 > len[u] && less(v, u)) {
                len[u] = len[v] + 1;
                parent[u] = v;
            }
    return len;
}

}  // namespace

std::vector<RootPair> SequenceCalculus::dist_chain(RootId a, RootId b) {
    auto p = make_pair(a, b);
    auto it = chains_.find(p);
    if (it != chains_.end()) return it->second;
    std::vector<RootPair> chain;
    if (!is_simple_pair(p.alpha, p.beta)) {
        const RootSystem& sys = system();
        Weight w = sys.root(p.alpha) + sys.root(p.beta);
        RootSet inside = open_interval(p.alpha, p.beta);
        std::vector<RootPair> nodes;
        for (const auto& q : pairs_of_weight(w))
            if (inside[q.alpha] && inside[q.beta] && !is_simple_pair(q.alpha, q.beta)) nodes.push_back(q);
        nodes.push_back(p);
        std::vector<RootSequence> seqs;
        std::vector<std::vector<int>> keys;
        for (const auto& q : nodes) seqs.push_back(as_sequence(q));
        for (const auto& s : seqs) keys.push_back(position_key(c_, s));
        std::vector<int> order(nodes.size());
        for (size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
        std::sort(order.begin(), order.end(), [&](int x, int y) { return keys[x] < keys[y]; });
        std::vector<int> parent;
        longest_chains(
            static_cast<int>(order.size()),
            [&](int v, int u) { return coarse_less(c_, seqs[order[v]], seqs[order[u]]); }, parent);
        int top = static_cast<int>(std::find(order.begin(), order.end(), static_cast<int>(nodes.size()) - 1) -
                                   order.begin());
        for (int u = top; u >= 0; u = parent[u]) chain.push_back(nodes[order[u]]);
        std::reverse(chain.begin(), chain.end());
    }
    chains_.emplace(p, chain);
    return chain;
}

int SequenceCalculus::dist(RootId a, RootId b) { return static_cast<int>(dist_chain(a, b).size()); }

int SequenceCalculus::gdist(const RootSequence& m) {
    auto cached = gdist_.find(m);
    if (cached != gdist_.end()) return cached->second;
    int result = 0;
    if (!is_simple(m)) {
        const RootSystem& sys = system();
        auto supp = m.support();
        RootSet hull;
        if (m.is_pair() && c_.comparable(supp[0], supp[1])) {
            auto p = make_pair(supp[0], supp[1]);
            hull = open_interval(p.alpha, p.beta);
        } else {
            for (RootId x : supp) {
                RootSet up = c_.above(x);
                up.set(x);
                for (RootId y : supp) {
                    RootSet down = c_.below(y);
                    down.set(y);
                    hull |= up & down;
                }
            }
        }
        std::vector<RootSequence> nodes;
        PartitionSearch search(sys, hull);
        std::size_t seen = 0;
        search.enumerate(m.weight(sys), {}, [&](const std::vector<RootId>& parts) {
            if (++seen > cap_) throw EnumerationCapExceeded(cap_);
            auto s = RootSequence::from_roots(parts);
            if (s != m && coarse_less(c_, s, m) && !is_simple(s)) nodes.push_back(std::move(s));
            return true;
        });
        nodes.push_back(m);
        std::vector<std::vector<int>> keys;
        for (const auto& s : nodes) keys.push_back(position_key(c_, s));
        std::vector<int> order(nodes.size());
        for (size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
        std::sort(order.begin(), order.end(), [&](int x, int y) { return keys[x] < keys[y]; });
        std::vector<int> parent;
        auto len = longest_chains(
            static_cast<int>(order.size()),
            [&](int v, int u) { return coarse_less(c_, nodes[order[v]], nodes[order[u]]); }, parent);
        for (size_t u = 0; u < order.size(); ++u)
            if (order[u] == static_cast<int>(nodes.size()) - 1) result = len[u];
    }
    gdist_.emplace(m, result);
    return result;
}

std::vector<RootSequence> SequenceCalculus::minimal_sequences(const RootSequence& s) {
    const RootSystem& sys = system();
    std::vector<RootSequence> above;
    PartitionSearch search(sys, c_.roots());
    std::size_t seen = 0;
    search.enumerate(s.weight(sys), {}, [&](const std::vector<RootId>& parts) {
        if (++seen > cap_) throw EnumerationCapExceeded(cap_);
        auto m = RootSequence::from_roots(parts);
        if (coarse_less(c_, s, m)) above.push_back(std::move(m));
        return true;
    });
    std::vector<std::vector<int>> keys;
    for (const auto& m : above) keys.push_back(position_key(c_, m));
    std::vector<int> order(above.size());
    for (size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return keys[x] < keys[y]; });
    std::vector<RootSequence> out;
    for (size_t u = 0; u < order.size(); ++u) {
        bool minimal = true;
        for (size_t v = 0; v < u && minimal; ++v)
            if (coarse_less(c_, above[order[v]], above[order[u]])) minimal = false;
        if (minimal) out.push_back(above[order[u]]);
    }
    return out;
}

SocleResult SequenceCalculus::socle(RootId a, RootId b) {
    auto p = make_pair(a, b);
    SocleResult res;
    if (is_simple_pair(p.alpha, p.beta)) {
        res.candidates.push_back(as_sequence(p));
        return res;
    }
    const RootSystem& sys = system();
    PartitionSearch search(sys, open_interval(p.alpha, p.beta));
    std::size_t seen = 0;
    search.enumerate(
        sys.root(p.alpha) + sys.root(p.beta), {},
        [&](const std::vector<RootId>& parts) {
            if (++seen > cap_) throw EnumerationCapExceeded(cap_);
            res.candidates.push_back(RootSequence::from_roots(parts));
            return true;
        },
        [&](RootId x, const std::vector<RootId>& chosen) {
            for (RootId y : chosen)
                if (y != x && !is_simple_pair(x, y)) return false;
            return true;
        });
    std::sort(res.candidates.begin(), res.candidates.end(), [&](const auto& x, const auto& y) {
        return position_key(c_, x) < position_key(c_, y);
    });
    return res;
}

bool SequenceCalculus::satisfies_step(const RootPair& lower, const RootPair& upper, int upper_dist) {
    const RootSystem& sys = system();
    const Weight &a1 = sys.root(lower.alpha), &b1 = sys.root(lower.beta);
    const Weight &a2 = sys.root(upper.alpha), &b2 = sys.root(upper.beta);
    auto try_eta = [&](const Weight& e1, const Weight& e2, bool left) {
        if (!(e1 == e2)) return false;
        auto eta = sys.find(e1);
        if (!eta || !c_.contains(*eta)) return false;
        // (a): eta with beta2 and alpha1; (b): beta1 and alpha2 with eta
        RootId x = left ? upper.beta : lower.beta;
        RootId y = left ? lower.alpha : upper.alpha;
        if (*eta == x || *eta == y) return false;
        return dist(*eta, x) <= upper_dist && dist(*eta, y) <= upper_dist;
    };
    return try_eta(b1 - b2, a2 - a1, true) || try_eta(b2 - b1, a1 - a2, false);
}

bool SequenceCalculus::good_adjacent(const RootPair& lower_in, const RootPair& upper_in) {
    auto lower = make_pair(lower_in.alpha, lower_in.beta);
    auto upper = make_pair(upper_in.alpha, upper_in.beta);
    const RootSystem& sys = system();
    Weight w = sys.root(upper.alpha) + sys.root(upper.beta);
    if (!(sys.root(lower.alpha) + sys.root(lower.beta) == w)) return false;
    auto lo = as_sequence(lower), up = as_sequence(upper);
    if (!coarse_less(c_, lo, up)) return false;
    int d = dist(upper.alpha, upper.beta);
    if (!satisfies_step(lower, upper, d)) return false;
    for (const auto& mid : pairs_of_weight(w)) {
        auto ms = as_sequence(mid);
        if (coarse_less(c_, lo, ms) && coarse_less(c_, ms, up) && satisfies_step(mid, upper, d)) return false;
    }
    return true;
}

std::vector<RootPair> SequenceCalculus::good_neighbors(const RootPair& p_in) {
    auto p = make_pair(p_in.alpha, p_in.beta);
    const RootSystem& sys = system();
    auto all = pairs_of_weight(sys.root(p.alpha) + sys.root(p.beta));
    auto top = as_sequence(p);
    std::vector<RootPair> below;
    for (const auto& q : all)
        if (coarse_less(c_, as_sequence(q), top)) below.push_back(q);
    std::set<RootPair> reached;
    std::deque<RootPair> todo{p};
    while (!todo.empty()) {
        RootPair cur = todo.front();
        todo.pop_front();
        for (const auto& q : below)
            if (!reached.count(q) && good_adjacent(q, cur)) {
                reached.insert(q);
                todo.push_back(q);
            }
    }
    std::vector<RootPair> out;
    for (const auto& q : reached)
        if (!is_simple_pair(q.alpha, q.beta)) out.push_back(q);
    return out;
}

std::vector<RootPair> SequenceCalculus::radius_pairs(RootId gamma) const {
    c_.require(gamma);
    std::vector<RootPair> out;
    for (const auto& q : pairs_of_weight(system().root(gamma)))
        if (c_.precedes(q.alpha, gamma) && c_.precedes(gamma, q.beta)) out.push_back(q);
    return out;
}

int SequenceCalculus::radius(RootId gamma) {
    if (system().is_simple(gamma)) throw NotApplicable("radius is defined for non-simple roots");
    if (!c_.is_longest()) throw NotApplicable("radius is defined for classes of the longest element");
    int best = 0;
    for (const auto& q : radius_pairs(gamma)) best = std::max(best, dist(q.alpha, q.beta));
    return best;
}

}  // namespace arq
