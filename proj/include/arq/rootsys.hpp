#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "arq/errors.hpp"

namespace arq {

constexpr int kMaxRank = 16;
constexpr int kMaxRoots = 128;

using RootId = int;
using RootSet = std::bitset<kMaxRoots>;

// Element of the root lattice, in coordinates of the simple roots.
struct Weight {
    std::array<std::int8_t, kMaxRank> c{};

    std::int8_t& operator[](int i) { return c[i]; }
    std::int8_t operator[](int i) const { return c[i]; }

    Weight& operator+=(const Weight& o) {
        for (int i = 0; i < kMaxRank; ++i) c[i] = static_cast<std::int8_t>(c[i] + o.c[i]);
        return *this;
    }
    Weight& operator-=(const Weight& o) {
        for (int i = 0; i < kMaxRank; ++i) c[i] = static_cast<std::int8_t>(c[i] - o.c[i]);
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend bool operator==(const Weight&, const Weight&) = default;

    Weight scaled(int k) const {
        Weight r;
        for (int i = 0; i < kMaxRank; ++i) r.c[i] = static_cast<std::int8_t>(c[i] * k);
        return r;
    }
    bool is_zero() const {
        for (auto x : c)
            if (x != 0) return false;
        return true;
    }
    bool nonnegative() const {
        for (auto x : c)
            if (x < 0) return false;
        return true;
    }
    bool nonpositive() const {
        for (auto x : c)
            if (x > 0) return false;
        return true;
    }
    // componentwise <=
    bool fits_in(const Weight& o) const {
        for (int i = 0; i < kMaxRank; ++i)
            if (c[i] > o.c[i]) return false;
        return true;
    }
    int height() const {
        int h = 0;
        for (auto x : c) h += x;
        return h;
    }
};

struct WeightHash {
    std::size_t operator()(const Weight& w) const noexcept;
};

enum class Kind { A, D, E };

char kind_letter(Kind k);
Kind parse_kind(std::string_view s);

class RootSystem {
public:
    RootSystem(Kind kind, int rank);

    Kind kind() const { return kind_; }
    int rank() const { return rank_; }
    std::string name() const;

    int cartan(int i, int j) const { return cartan_[i][j]; }
    bool adjacent(int i, int j) const { return i != j && cartan_[i][j] != 0; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int i) const { return nbrs_[i]; }
    int graph_distance(int i, int j) const { return dist_[i][j]; }

    int size() const { return static_cast<int>(roots_.size()); }
    const Weight& root(RootId r) const { return roots_[r]; }
    std::optional<RootId> find(const Weight& w) const;
    RootId simple(int i) const { return i; }
    bool is_simple(RootId r) const { return r < rank_; }
    RootId highest_root() const { return size() - 1; }

    int star(int i) const { return star_[i]; }
    int dual_coxeter() const;

    int height(RootId r) const { return roots_[r].height(); }
    int mul(RootId r) const;
    std::vector<int> supp(RootId r) const;
    std::vector<int> supp_ge(RootId r, int k) const;

    // symmetric form with (a_i, a_i) = 2
    int pairing(const Weight& a, const Weight& b) const;
    Weight reflect(int i, const Weight& w) const;
    // root id of a+b, or -1
    RootId sum(RootId a, RootId b) const { return sum_[a][b]; }

    // D-type only: coordinates in the orthonormal basis e_1..e_n
    std::vector<int> epsilon(const Weight& w) const;

    std::string format_root(RootId r) const;
    std::string format_digits(const Weight& w) const;
    RootId parse_root(std::string_view text) const;
    Weight parse_weight(std::string_view text) const;

private:
    Kind kind_;
    int rank_;
    std::vector<std::vector<int>> cartan_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> nbrs_;
    std::vector<std::vector<int>> dist_;
    std::vector<Weight> roots_;
    std::unordered_map<Weight, RootId, WeightHash> index_;
    std::vector<int> star_;
    std::vector<std::vector<RootId>> sum_;
};

using SystemPtr = std::shared_ptr<const RootSystem>;

// Cached, shared instance per (kind, rank).
SystemPtr root_system(Kind kind, int rank);
// Accepts "A5", "D4", "E6", ...
SystemPtr root_system(std::string_view name);

}  // namespace arq
