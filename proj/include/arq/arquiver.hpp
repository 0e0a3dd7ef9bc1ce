#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arq/rootsys.hpp"
#include "arq/words.hpp"

namespace arq {

class DynkinQuiver {
public:
    // arrows as 0-based (tail, head); every Dynkin edge must appear exactly once
    DynkinQuiver(SystemPtr sys, const std::vector<std::pair<int, int>>& arrows);

    // "3>2,2>1,2>4" with 1-based nodes; "a<b" is read as b>a
    static DynkinQuiver parse(SystemPtr sys, std::string_view text);
    // arrows point away from node 1
    static DynkinQuiver monotone(SystemPtr sys);
    static std::vector<DynkinQuiver> all_orientations(SystemPtr sys);

    const RootSystem& system() const { return *sys_; }
    const SystemPtr& system_ptr() const { return sys_; }

    bool arrow(int i, int j) const { return (out_[i] >> j) & 1u; }
    bool is_source(int i) const;
    bool is_sink(int i) const;
    std::vector<std::pair<int, int>> arrows() const;

    DynkinQuiver reflected(int i) const;
    DynkinQuiver reversed() const;
    std::string format() const;

    friend bool operator==(const DynkinQuiver& a, const DynkinQuiver& b) {
        return a.sys_->name() == b.sys_->name() && a.out_ == b.out_;
    }

private:
    DynkinQuiver(SystemPtr sys, std::vector<std::uint32_t> out) : sys_(std::move(sys)), out_(std::move(out)) {}
    SystemPtr sys_;
    std::vector<std::uint32_t> out_;
};

Word coxeter_word(const DynkinQuiver& q);
RootId gamma(const DynkinQuiver& q, int i);
RootId theta(const DynkinQuiver& q, int i);
// xi_j = xi_i - 1 for every arrow i -> j, normalized so the smallest-index source has 0
std::vector<int> height_function(const DynkinQuiver& q);

struct ArVertex {
    int residue;
    int p;
    RootId root;
};

class ARQuiver {
public:
    explicit ARQuiver(const DynkinQuiver& q);

    const DynkinQuiver& quiver() const { return quiver_; }
    const RootSystem& system() const { return quiver_.system(); }
    int xi(int i) const { return xi_[i]; }
    const std::vector<int>& xi() const { return xi_; }
    int m(int i) const { return m_[i]; }

    // sorted by p descending, then residue ascending
    const std::vector<ArVertex>& vertices() const { return verts_; }
    std::optional<RootId> label(int i, int p) const;
    int residue(RootId r) const { return coord_[r].first; }
    int coordinate(RootId r) const { return coord_[r].second; }
    // arrows between roots, tail first
    std::vector<std::pair<RootId, RootId>> arrows() const;

    std::optional<RootId> tau(RootId r) const;
    std::optional<RootId> tau_inverse(RootId r) const;
    // directed path of positive length from -> to
    bool path(RootId from, RootId to) const { return reach_[from][to]; }

    Word reading() const;
    bool is_reading(const std::vector<RootId>& order) const;
    // visits every arrow-compatible reading; stop by returning false
    void for_each_reading(const std::function<bool(const std::vector<RootId>&)>& visit) const;
    std::vector<Word> adapted_words(std::size_t cap) const;

    CommClass commutation_class() const;

    friend bool operator==(const ARQuiver& a, const ARQuiver& b);
    friend ARQuiver reflect(const ARQuiver& g, int i);

private:
    ARQuiver(DynkinQuiver q, std::vector<ArVertex> verts);
    void finish();

    DynkinQuiver quiver_;
    std::vector<int> xi_;
    std::vector<int> m_;
    std::vector<ArVertex> verts_;
    std::map<std::pair<int, int>, RootId> at_;
    std::vector<std::pair<int, int>> coord_;
    std::vector<RootSet> reach_;
};

// reflection functor at a sink; throws NotASink
ARQuiver reflect(const ARQuiver& g, int i);

bool is_adapted(const RootSystem& sys, const Word& w, const DynkinQuiver& q);
std::optional<DynkinQuiver> find_quiver(const CommClass& c);

// Sectional paths, swings and the kappa/sigma enumerations of the A and D types.
struct SectionalPath {
    char direction;            // 'S' or 'N'
    std::vector<RootId> roots;  // in arrow order
    int shared = 0;            // A: shared component; D: signed shared e-index (1-based), 0 if none
};

struct Swing {
    int index;                  // a: every root carries +e_a
    std::vector<RootId> roots;
    int r = 0, s = 0, u = 0;    // start residue of the S part, end residue of the N part, apex coordinate
    bool well_formed = false;
    bool contains_simple = false;
};

struct StructureReport {
    std::vector<SectionalPath> s_paths, n_paths;
    std::vector<Swing> swings;
    std::vector<SectionalPath> shallow;
    std::vector<RootId> kappa, sigma;
    std::vector<int> kappa_index, sigma_index;  // D: j_kappa and i_sigma
    int ta = 0, ta_prime = 0;                    // D only, 1-based
    int ta_from_xi = 0;
};

StructureReport structure_report(const ARQuiver& g);

}  // namespace arq
