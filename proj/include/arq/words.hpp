#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arq/rootsys.hpp"

namespace arq {

// letters are 0-based node indices
using Word = std::vector<int>;

Word parse_word(std::string_view text, int rank);
std::string format_word(const Word& w);

// beta_k = s_{i_1} ... s_{i_{k-1}} (alpha_{i_k}); throws NotReduced
std::vector<RootId> roots_of_word(const RootSystem& sys, const Word& w);
bool is_reduced(const RootSystem& sys, const Word& w);

Word longest_word(const RootSystem& sys);
// uniformly chosen letter among the right ascents at each step; not uniform over words
Word random_longest_word(const RootSystem& sys, std::mt19937& rng);

// The heap of a reduced word; roots are attached to letter positions.
class CommClass {
public:
    CommClass(SystemPtr sys, Word w);

    const RootSystem& system() const { return *sys_; }
    const SystemPtr& system_ptr() const { return sys_; }
    const Word& word() const { return word_; }
    int length() const { return static_cast<int>(word_.size()); }
    bool is_longest() const { return length() == sys_->size(); }

    RootId root_at(int pos) const { return roots_[pos]; }
    const std::vector<RootId>& roots_in_order() const { return roots_; }
    int position(RootId r) const { return pos_[r]; }
    bool contains(RootId r) const { return pos_[r] >= 0; }
    const RootSet& roots() const { return support_; }

    // heap covers as position pairs (p, q), p < q
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    bool reaches(int p, int q) const { return p != q && reach_[p][q]; }

    // a strictly precedes b in the commutation class order
    bool precedes(RootId a, RootId b) const;
    bool comparable(RootId a, RootId b) const { return precedes(a, b) || precedes(b, a); }
    const RootSet& below(RootId r) const { return below_[r]; }
    const RootSet& above(RootId r) const { return above_[r]; }

    void require(RootId r) const;

private:
    SystemPtr sys_;
    Word word_;
    std::vector<RootId> roots_;
    std::vector<int> pos_;
    RootSet support_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::bitset<kMaxRoots>> reach_;  // by position
    std::vector<RootSet> below_, above_;          // by root
};

std::vector<Word> enumerate_class(const CommClass& c, std::size_t cap);

}  // namespace arq
