#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "arq/orders.hpp"
#include "arq/words.hpp"

namespace arq {

constexpr std::size_t kDefaultPartitionCap = 1'000'000;

struct PartitionOptions {
    int max_parts = 0;  // 0: unbounded
    bool basic_only = false;
    std::size_t cap = kDefaultPartitionCap;
};

// Multisets drawn from a fixed root set with a prescribed sum. Dead states are memoized
// through reach(r): the largest list index that can start a decomposition of r.
class PartitionSearch {
public:
    PartitionSearch(const RootSystem& sys, const RootSet& allowed);

    bool exists(const Weight& w);
    // visit(parts) returns false to stop; admit(root, parts so far) can veto a part
    void enumerate(const Weight& w, const PartitionOptions& opts,
                   const std::function<bool(const std::vector<RootId>&)>& visit,
                   const std::function<bool(RootId, const std::vector<RootId>&)>& admit = {});

private:
    int reach(const Weight& r);

    const RootSystem& sys_;
    std::vector<RootId> roots_;  // height descending
    std::unordered_map<Weight, int, WeightHash> memo_;
};

std::vector<RootSequence> vector_partitions(const CommClass& c, const Weight& w,
                                            const PartitionOptions& opts = {});

// a pair written in the order of the representative word
struct RootPair {
    RootId alpha, beta;
    friend bool operator==(const RootPair&, const RootPair&) = default;
    friend auto operator<=>(const RootPair&, const RootPair&) = default;
};

struct SocleResult {
    std::vector<RootSequence> candidates;  // simple sequences below the pair
    bool unique() const { return candidates.size() == 1; }
};

// Sequence calculus over one commutation class. Memoizes pair simplicity and distances;
// not thread-safe, use one instance per thread.
class SequenceCalculus {
public:
    explicit SequenceCalculus(CommClass c, std::size_t cap = kDefaultPartitionCap);

    const CommClass& comm_class() const { return c_; }
    const RootSystem& system() const { return c_.system(); }

    RootPair make_pair(RootId a, RootId b) const;
    RootSequence as_sequence(const RootPair& p) const { return RootSequence::of({p.alpha, p.beta}); }

    bool is_simple_pair(RootId a, RootId b);
    bool is_simple(const RootSequence& m);

    // distinct pairs of roots of the class with the given sum
    std::vector<RootPair> pairs_of_weight(const Weight& w) const;

    std::vector<RootSequence> minimal_sequences(const RootSequence& s);
    SocleResult socle(RootId a, RootId b);

    int dist(RootId a, RootId b);
    // a longest chain realizing dist, ending at the pair itself; empty when simple
    std::vector<RootPair> dist_chain(RootId a, RootId b);
    int gdist(const RootSequence& m);

    bool good_adjacent(const RootPair& lower, const RootPair& upper);
    std::vector<RootPair> good_neighbors(const RootPair& p);
    int len(const RootPair& p) { return static_cast<int>(good_neighbors(p).size()); }

    int radius(RootId gamma);
    std::vector<RootPair> radius_pairs(RootId gamma) const;

private:
    RootSet open_interval(RootId a, RootId b) const;
    bool satisfies_step(const RootPair& lower, const RootPair& upper, int upper_dist);

    CommClass c_;
    std::size_t cap_;
    std::vector<std::vector<signed char>> simple_;
    std::map<RootPair, std::vector<RootPair>> chains_;
    std::map<RootSequence, int> gdist_;
};

}  // namespace arq
