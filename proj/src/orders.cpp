#include "arq/orders.hpp"

#include <algorithm>
#include <cctype>

namespace arq {

RootSequence::RootSequence(std::vector<Part> parts) {
    std::sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) { return a.root < b.root; });
    for (const auto& p : parts) {
        if (p.count < 0) throw ParseError("negative multiplicity in a root sequence");
        if (p.count == 0) continue;
        if (!parts_.empty() && parts_.back().root == p.root) parts_.back().count += p.count;
        else parts_.push_back(p);
    }
}

RootSequence RootSequence::of(std::initializer_list<RootId> roots) {
    return from_roots(std::vector<RootId>(roots));
}

RootSequence RootSequence::from_roots(const std::vector<RootId>& roots) {
    std::vector<Part> parts;
    for (RootId r : roots) parts.push_back({r, 1});
    return RootSequence(std::move(parts));
}

int RootSequence::count(RootId r) const {
    auto it = std::lower_bound(parts_.begin(), parts_.end(), r,
                               [](const Part& p, RootId x) { return p.root < x; });
    return it != parts_.end() && it->root == r ? it->count : 0;
}

std::vector<RootId> RootSequence::support() const {
    std::vector<RootId> s;
    for (const auto& p : parts_) s.push_back(p.root);
    return s;
}

RootSet RootSequence::support_set() const {
    RootSet s;
    for (const auto& p : parts_) s.set(p.root);
    return s;
}

int RootSequence::size() const {
    int s = 0;
    for (const auto& p : parts_) s += p.count;
    return s;
}

bool RootSequence::basic() const {
    for (const auto& p : parts_)
        if (p.count > 1) return false;
    return true;
}

Weight RootSequence::weight(const RootSystem& sys) const {
    Weight w;
    for (const auto& p : parts_) w += sys.root(p.root).scaled(p.count);
    return w;
}

namespace {

std::string join(const RootSystem& sys, const std::vector<RootId>& roots) {
    std::string s = "(";
    for (size_t k = 0; k < roots.size(); ++k) {
        if (k) s += ",";
        std::string r = sys.format_root(roots[k]);
        // E-type roots are digit strings; drop the parentheses inside a sequence
        if (sys.kind() == Kind::E) r = r.substr(1, r.size() - 2);
        s += r;
    }
    return s + ")";
}

}  // namespace

std::string format_sequence(const CommClass& c, const RootSequence& m) {
    std::vector<RootId> roots;
    for (const auto& p : m.parts())
        for (int k = 0; k < p.count; ++k) roots.push_back(p.root);
    std::stable_sort(roots.begin(), roots.end(),
                     [&](RootId a, RootId b) { return c.position(a) < c.position(b); });
    return join(c.system(), roots);
}

std::string format_sequence(const RootSystem& sys, const RootSequence& m) {
    std::vector<RootId> roots;
    for (const auto& p : m.parts())
        for (int k = 0; k < p.count; ++k) roots.push_back(p.root);
    return join(sys, roots);
}

RootSequence parse_sequence(const RootSystem& sys, const std::string& text) {
    std::string t = text;
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
    size_t b = 0;
    while (b < t.size() && std::isspace(static_cast<unsigned char>(t[b]))) ++b;
    t = t.substr(b);
    // an outer pair of parentheses around a list is optional
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')' && t.find(',') != std::string::npos) {
        bool nested = t.find_first_of("[{<", 1) != std::string::npos;
        bool e_list = sys.kind() == Kind::E && t.find('(', 1) == std::string::npos;
        if (nested || e_list) t = t.substr(1, t.size() - 2);
    }
    std::vector<RootId> roots;
    std::string cur;
    int depth = 0;
    auto flush = [&] {
        size_t a = cur.find_first_not_of(" \t");
        if (a == std::string::npos) {
            cur.clear();
            return;
        }
        roots.push_back(sys.parse_root(cur.substr(a)));
        cur.clear();
    };
    for (char ch : t) {
        if (ch == '[' || ch == '{' || ch == '<' || ch == '(') ++depth;
        if (ch == ']' || ch == '}' || ch == '>' || ch == ')') --depth;
        if (ch == ',' && depth == 0) flush();
        else cur += ch;
    }
    flush();
    if (roots.empty()) throw ParseError("empty root sequence");
    return RootSequence::from_roots(roots);
}

bool total_less(const CommClass& c, RootId a, RootId b) {
    c.require(a);
    c.require(b);
    return c.position(a) < c.position(b);
}

bool partial_less(const CommClass& c, RootId a, RootId b) { return c.precedes(a, b); }

bool bilex_less(const std::vector<int>& pos, const RootSequence& lhs, const RootSequence& rhs) {
    int first = -1, last = -1;
    bool first_less = false, last_less = false;
    auto visit = [&](RootId r, int x, int y) {
        if (x == y) return;
        int p = pos.at(r);
        if (p < 0) throw RootNotInWord("root does not occur in the word");
        if (first < 0 || p < first) {
            first = p;
            first_less = x < y;
        }
        if (last < 0 || p > last) {
            last = p;
            last_less = x < y;
        }
    };
    const auto &a = lhs.parts(), &b = rhs.parts();
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].root < b[j].root)) {
            visit(a[i].root, a[i].count, 0);
            ++i;
        } else if (i == a.size() || b[j].root < a[i].root) {
            visit(b[j].root, 0, b[j].count);
            ++j;
        } else {
            visit(a[i].root, a[i].count, b[j].count);
            ++i;
            ++j;
        }
    }
    return first >= 0 && first_less && last_less;
}

bool bilex_less(const CommClass& c, const RootSequence& lhs, const RootSequence& rhs) {
    std::vector<int> pos(c.system().size());
    for (int r = 0; r < c.system().size(); ++r) pos[r] = c.position(r);
    return bilex_less(pos, lhs, rhs);
}

bool coarse_less(const CommClass& c, const RootSequence& lhs, const RootSequence& rhs) {
    // difference set D with the sign of each entry
    RootSet diff, smaller;
    const auto &a = lhs.parts(), &b = rhs.parts();
    size_t i = 0, j = 0;
    auto mark = [&](RootId r, int x, int y) {
        c.require(r);
        if (x == y) return;
        diff.set(r);
        if (x < y) smaller.set(r);
    };
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].root < b[j].root)) {
            mark(a[i].root, a[i].count, 0);
            ++i;
        } else if (i == a.size() || b[j].root < a[i].root) {
            mark(b[j].root, 0, b[j].count);
            ++j;
        } else {
            mark(a[i].root, a[i].count, b[j].count);
            ++i;
            ++j;
        }
    }
    if (diff.none()) return false;
    for (int r = 0; r < c.system().size(); ++r) {
        if (!diff[r] || smaller[r]) continue;
        // r has lhs > rhs, so it must be neither minimal nor maximal in D
        if ((c.below(r) & diff).none() || (c.above(r) & diff).none()) return false;
    }
    return true;
}

std::vector<int> position_key(const CommClass& c, const RootSequence& m) {
    std::vector<int> key(c.length(), 0);
    for (const auto& p : m.parts()) {
        c.require(p.root);
        key[c.position(p.root)] = p.count;
    }
    return key;
}

}  // namespace arq
