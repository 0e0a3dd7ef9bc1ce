#include "arq/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <deque>
#include <map>
#include <mutex>
#include <sstream>

namespace arq {

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
    std::uint64_t lo, hi;
    std::memcpy(&lo, w.c.data(), 8);
    std::memcpy(&hi, w.c.data() + 8, 8);
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL;
    h ^= (hi + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2));
    h ^= h >> 31;
    return static_cast<std::size_t>(h * 0xBF58476D1CE4E5B9ULL);
}

char kind_letter(Kind k) {
    switch (k) {
    case Kind::A: return 'A';
    case Kind::D: return 'D';
    case Kind::E: return 'E';
    }
    return '?';
}

Kind parse_kind(std::string_view s) {
    if (s.size() == 1) {
        switch (std::toupper(static_cast<unsigned char>(s[0]))) {
        case 'A': return Kind::A;
        case 'D': return Kind::D;
        case 'E': return Kind::E;
        }
    }
    throw UnsupportedType("unsupported Dynkin type '" + std::string(s) + "'");
}

namespace {

std::vector<std::pair<int, int>> dynkin_edges(Kind kind, int n) {
    std::vector<std::pair<int, int>> e;
    switch (kind) {
    case Kind::A:
        for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
        break;
    case Kind::D:
        for (int i = 0; i + 2 < n; ++i) e.emplace_back(i, i + 1);
        e.emplace_back(n - 3, n - 1);
        break;
    case Kind::E:
        if (n == 6) {
            e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}};
        } else {
            e = {{0, 2}, {1, 3}};
            for (int i = 2; i + 1 < n; ++i) e.emplace_back(i, i + 1);
        }
        break;
    }
    return e;
}

void check_supported(Kind kind, int rank) {
    bool ok = false;
    switch (kind) {
    case Kind::A: ok = rank >= 1 && rank <= kMaxRank; break;
    case Kind::D: ok = rank >= 4 && rank <= kMaxRank; break;
    case Kind::E: ok = rank >= 6 && rank <= 8; break;
    }
    if (!ok)
        throw UnsupportedType(std::string("unsupported type ") + kind_letter(kind) +
                              std::to_string(rank));
    long n = rank;
    long roots = kind == Kind::A ? n * (n + 1) / 2 : kind == Kind::D ? n * (n - 1) : 0;
    if (roots > kMaxRoots)
        throw UnsupportedType(std::string("type ") + kind_letter(kind) + std::to_string(rank) +
                              " has more than " + std::to_string(kMaxRoots) + " positive roots");
}

}  // namespace

RootSystem::RootSystem(Kind kind, int rank) : kind_(kind), rank_(rank) {
    check_supported(kind, rank);
    const int n = rank;
    edges_ = dynkin_edges(kind, n);
    cartan_.assign(n, std::vector<int>(n, 0));
    nbrs_.assign(n, {});
    for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
    for (auto [a, b] : edges_) {
        cartan_[a][b] = cartan_[b][a] = -1;
        nbrs_[a].push_back(b);
        nbrs_[b].push_back(a);
    }
    for (auto& v : nbrs_) std::sort(v.begin(), v.end());

    dist_.assign(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        std::deque<int> q{s};
        dist_[s][s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : nbrs_[u])
                if (dist_[s][v] < 0) {
                    dist_[s][v] = dist_[s][u] + 1;
                    q.push_back(v);
                }
        }
    }

    // orbit closure from the simple roots
    std::vector<Weight> found;
    std::unordered_map<Weight, int, WeightHash> seen;
    std::deque<Weight> queue;
    for (int i = 0; i < n; ++i) {
        Weight w;
        w[i] = 1;
        seen.emplace(w, 0);
        queue.push_back(w);
    }
    while (!queue.empty()) {
        Weight w = queue.front();
        queue.pop_front();
        found.push_back(w);
        for (int i = 0; i < n; ++i) {
            Weight r = reflect(i, w);
            if (r.nonnegative() && !r.is_zero() && !seen.count(r)) {
                seen.emplace(r, 0);
                queue.push_back(r);
            }
        }
    }
    std::sort(found.begin(), found.end(), [](const Weight& a, const Weight& b) {
        int ha = a.height(), hb = b.height();
        if (ha != hb) return ha < hb;
        return a.c > b.c;
    });
    roots_ = std::move(found);
    for (int r = 0; r < size(); ++r) index_.emplace(roots_[r], r);

    sum_.assign(size(), std::vector<RootId>(size(), -1));
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b)
            if (auto s = find(roots_[a] + roots_[b])) sum_[a][b] = *s;

    star_.resize(n);
    for (int i = 0; i < n; ++i) star_[i] = i;
    if (kind == Kind::A) {
        for (int i = 0; i < n; ++i) star_[i] = n - 1 - i;
    } else if (kind == Kind::D && n % 2 == 1) {
        std::swap(star_[n - 2], star_[n - 1]);
    } else if (kind == Kind::E && n == 6) {
        star_ = {4, 3, 2, 1, 0, 5};
    }
}

std::string RootSystem::name() const { return kind_letter(kind_) + std::to_string(rank_); }

std::optional<RootId> RootSystem::find(const Weight& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int RootSystem::dual_coxeter() const {
    switch (kind_) {
    case Kind::A: return rank_ + 1;
    case Kind::D: return 2 * rank_ - 2;
    case Kind::E: return rank_ == 6 ? 12 : rank_ == 7 ? 18 : 30;
    }
    return 0;
}

int RootSystem::mul(RootId r) const {
    int m = 0;
    for (int i = 0; i < rank_; ++i) m = std::max<int>(m, roots_[r][i]);
    return m;
}

std::vector<int> RootSystem::supp(RootId r) const { return supp_ge(r, 1); }

std::vector<int> RootSystem::supp_ge(RootId r, int k) const {
    std::vector<int> s;
    for (int i = 0; i < rank_; ++i)
        if (roots_[r][i] >= k) s.push_back(i);
    return s;
}

int RootSystem::pairing(const Weight& a, const Weight& b) const {
    int s = 0;
    for (int i = 0; i < rank_; ++i) {
        if (a[i] == 0) continue;
        int t = 0;
        for (int j = 0; j < rank_; ++j) t += cartan_[i][j] * b[j];
        s += a[i] * t;
    }
    return s;
}

Weight RootSystem::reflect(int i, const Weight& w) const {
    int k = 0;
    for (int j = 0; j < rank_; ++j) k += cartan_[i][j] * w[j];
    Weight r = w;
    r[i] = static_cast<std::int8_t>(r[i] - k);
    return r;
}

std::vector<int> RootSystem::epsilon(const Weight& w) const {
    if (kind_ != Kind::D) throw UnsupportedType("epsilon coordinates exist only for type D");
    const int n = rank_;
    std::vector<int> e(n, 0);
    for (int i = 0; i + 1 < n; ++i) {
        e[i] += w[i];
        e[i + 1] -= w[i];
    }
    e[n - 2] += w[n - 1];
    e[n - 1] += w[n - 1];
    return e;
}

std::string RootSystem::format_digits(const Weight& w) const {
    std::string s = "(";
    for (int i = 0; i < rank_; ++i) s += std::to_string(static_cast<int>(w[i]));
    return s + ")";
}

std::string RootSystem::format_root(RootId r) const {
    const Weight& w = roots_[r];
    if (kind_ == Kind::A) {
        auto s = supp(r);
        int a = s.front() + 1, b = s.back() + 1;
        if (a == b) return "[" + std::to_string(a) + "]";
        return "[" + std::to_string(a) + "," + std::to_string(b) + "]";
    }
    if (kind_ == Kind::D) {
        auto e = epsilon(w);
        int a = -1, b = -1;
        for (int i = 0; i < rank_; ++i) {
            if (e[i] == 0) continue;
            if (a < 0) a = i;
            else b = i;
        }
        std::string sb = std::to_string(b + 1);
        return "{" + std::to_string(a + 1) + "|" + (e[b] < 0 ? "-" : "") + sb + "}";
    }
    return format_digits(w);
}

namespace {

std::string strip(std::string_view s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

int parse_int(const std::string& s, std::string_view whole) {
    std::string t = strip(s);
    if (t.empty()) throw ParseError("malformed root '" + std::string(whole) + "'");
    size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(t, &pos);
    } catch (const std::exception&) {
        throw ParseError("malformed root '" + std::string(whole) + "'");
    }
    if (pos != t.size()) throw ParseError("malformed root '" + std::string(whole) + "'");
    return v;
}

}  // namespace

Weight RootSystem::parse_weight(std::string_view text) const {
    std::string t = strip(text);
    // unicode angle brackets are accepted for D-type roots
    for (std::string_view from : {"⟨", "⟩"}) {
        size_t p;
        while ((p = t.find(from)) != std::string::npos) t.replace(p, from.size(), from == "⟨" ? "{" : "}");
    }
    if (t.size() < 2) throw ParseError("malformed root '" + std::string(text) + "'");
    char open = t.front(), close = t.back();
    std::string body = t.substr(1, t.size() - 2);
    Weight w;
    const int n = rank_;
    if (open == '[' && close == ']') {
        if (kind_ != Kind::A) throw ParseError("[a,b] notation is for type A");
        int a, b;
        auto comma = body.find(',');
        if (comma == std::string::npos) {
            a = b = parse_int(body, text);
        } else {
            a = parse_int(body.substr(0, comma), text);
            b = parse_int(body.substr(comma + 1), text);
        }
        if (a < 1 || b > n || a > b) throw NotARoot("not a root: " + std::string(text));
        for (int i = a - 1; i < b; ++i) w[i] = 1;
        return w;
    }
    if ((open == '{' && close == '}') || (open == '<' && close == '>')) {
        if (kind_ != Kind::D) throw ParseError("{a|b} notation is for type D");
        auto bar = body.find('|');
        if (bar == std::string::npos) throw ParseError("malformed root '" + std::string(text) + "'");
        int a = parse_int(body.substr(0, bar), text);
        int b = parse_int(body.substr(bar + 1), text);
        if (a < 1 || a > n || b == 0 || std::abs(b) > n || std::abs(b) == a)
            throw NotARoot("not a root: " + std::string(text));
        std::vector<int> e(n, 0);
        e[a - 1] = 1;
        e[std::abs(b) - 1] += b > 0 ? 1 : -1;
        for (const Weight& r : roots_)
            if (epsilon(r) == e) return r;
        throw NotARoot("not a positive root: " + std::string(text));
    }
    std::string digits = body;
    if (!(open == '(' && close == ')')) digits = t;
    if (static_cast<int>(digits.size()) != n)
        throw ParseError("expected " + std::to_string(n) + " digits in '" + std::string(text) + "'");
    for (int i = 0; i < n; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(digits[i])))
            throw ParseError("malformed root '" + std::string(text) + "'");
        w[i] = static_cast<std::int8_t>(digits[i] - '0');
    }
    return w;
}

RootId RootSystem::parse_root(std::string_view text) const {
    Weight w = parse_weight(text);
    auto r = find(w);
    if (!r) throw NotARoot("not a positive root of " + name() + ": " + std::string(text));
    return *r;
}

SystemPtr root_system(Kind kind, int rank) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, SystemPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(kind), rank);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto sys = std::make_shared<const RootSystem>(kind, rank);
    cache.emplace(key, sys);
    return sys;
}

SystemPtr root_system(std::string_view name) {
    std::string t = strip(name);
    if (t.size() < 2) throw UnsupportedType("unsupported type '" + t + "'");
    Kind k = parse_kind(t.substr(0, 1));
    int n = 0;
    try {
        size_t pos = 0;
        n = std::stoi(t.substr(1), &pos);
        if (pos != t.size() - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw UnsupportedType("unsupported type '" + t + "'");
    }
    return root_system(k, n);
}

}  // namespace arq
