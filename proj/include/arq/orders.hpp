#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arq/rootsys.hpp"
#include "arq/words.hpp"

namespace arq {

// A finitely supported Z>=0-valued function on positive roots.
class RootSequence {
public:
    struct Part {
        RootId root;
        int count;
        friend bool operator==(const Part&, const Part&) = default;
        friend auto operator<=>(const Part&, const Part&) = default;
    };

    RootSequence() = default;
    explicit RootSequence(std::vector<Part> parts);
    static RootSequence of(std::initializer_list<RootId> roots);
    static RootSequence from_roots(const std::vector<RootId>& roots);

    int count(RootId r) const;
    const std::vector<Part>& parts() const { return parts_; }
    std::vector<RootId> support() const;
    RootSet support_set() const;
    int size() const;
    bool empty() const { return parts_.empty(); }
    bool basic() const;
    bool is_pair() const { return basic() && size() == 2; }
    Weight weight(const RootSystem& sys) const;

    friend bool operator==(const RootSequence&, const RootSequence&) = default;
    friend auto operator<=>(const RootSequence&, const RootSequence&) = default;

private:
    std::vector<Part> parts_;  // sorted by root, counts > 0
};

// roots listed in the order of the word, e.g. "({1|-4},{2|3},{2|-3})"
std::string format_sequence(const CommClass& c, const RootSequence& m);
std::string format_sequence(const RootSystem& sys, const RootSequence& m);
RootSequence parse_sequence(const RootSystem& sys, const std::string& text);

bool total_less(const CommClass& c, RootId a, RootId b);
bool partial_less(const CommClass& c, RootId a, RootId b);

// bi-lexicographic order with respect to positions pos[root] of some word
bool bilex_less(const std::vector<int>& pos, const RootSequence& lhs, const RootSequence& rhs);
bool bilex_less(const CommClass& c, const RootSequence& lhs, const RootSequence& rhs);

// coarse order of the commutation class, via minimal/maximal elements of the difference
bool coarse_less(const CommClass& c, const RootSequence& lhs, const RootSequence& rhs);

// count vector in word position order; a linear extension key for equal-weight coarse order
std::vector<int> position_key(const CommClass& c, const RootSequence& m);

}  // namespace arq
