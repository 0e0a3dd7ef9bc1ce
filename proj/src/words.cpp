#include "arq/words.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <stdexcept>

namespace arq {

Word parse_word(std::string_view text, int rank) {
    Word w;
    std::string num;
    auto flush = [&] {
        if (num.empty()) return;
        int v = std::stoi(num);
        if (v < 1 || v > rank) throw ParseError("letter " + num + " out of range 1.." + std::to_string(rank));
        w.push_back(v - 1);
        num.clear();
    };
    for (char ch : text) {
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            num += ch;
        } else if (ch == ' ' || ch == ',' || ch == 's' || ch == '\t' || ch == '_') {
            flush();
        } else {
            throw ParseError(std::string("unexpected character '") + ch + "' in word");
        }
    }
    flush();
    return w;
}

std::string format_word(const Word& w) {
    std::string s;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) s += ' ';
        s += std::to_string(w[k] + 1);
    }
    return s;
}

std::vector<RootId> roots_of_word(const RootSystem& sys, const Word& w) {
    std::vector<RootId> out;
    RootSet seen;
    for (size_t k = 0; k < w.size(); ++k) {
        if (w[k] < 0 || w[k] >= sys.rank()) throw ParseError("letter out of range");
        Weight b;
        b[w[k]] = 1;
        for (size_t j = k; j-- > 0;) b = sys.reflect(w[j], b);
        auto r = sys.find(b);
        if (!r || seen[*r])
            throw NotReduced("word is not reduced at position " + std::to_string(k + 1));
        seen.set(*r);
        out.push_back(*r);
    }
    return out;
}

bool is_reduced(const RootSystem& sys, const Word& w) {
    try {
        roots_of_word(sys, w);
        return true;
    } catch (const NotReduced&) {
        return false;
    }
}

namespace {

// w(alpha_i) for w given by the word, as a weight
Weight act(const RootSystem& sys, const Word& w, int i) {
    Weight b;
    b[i] = 1;
    for (size_t j = w.size(); j-- > 0;) b = sys.reflect(w[j], b);
    return b;
}

}  // namespace

Word longest_word(const RootSystem& sys) {
    const int n = sys.rank();
    // monotone orientation: arrows point away from node 1
    std::vector<std::vector<bool>> arrow(n, std::vector<bool>(n, false));
    for (auto [a, b] : sys.edges()) {
        if (sys.graph_distance(0, a) < sys.graph_distance(0, b)) arrow[a][b] = true;
        else arrow[b][a] = true;
    }
    Word w;
    while (static_cast<int>(w.size()) < sys.size()) {
        int pick = -1;
        for (int i = 0; i < n && pick < 0; ++i) {
            bool source = true;
            for (int j : sys.neighbors(i))
                if (arrow[j][i]) source = false;
            if (source && act(sys, w, i).nonnegative()) pick = i;
        }
        if (pick < 0) throw std::logic_error("source reading stalled before w0");
        w.push_back(pick);
        for (int j : sys.neighbors(pick)) {
            arrow[pick][j] = false;
            arrow[j][pick] = true;
        }
    }
    return w;
}

Word random_longest_word(const RootSystem& sys, std::mt19937& rng) {
    Word w;
    while (static_cast<int>(w.size()) < sys.size()) {
        std::vector<int> ascents;
        for (int i = 0; i < sys.rank(); ++i)
            if (act(sys, w, i).nonnegative()) ascents.push_back(i);
        std::uniform_int_distribution<size_t> pick(0, ascents.size() - 1);
        w.push_back(ascents[pick(rng)]);
    }
    return w;
}

CommClass::CommClass(SystemPtr sys, Word w) : sys_(std::move(sys)), word_(std::move(w)) {
    roots_ = roots_of_word(*sys_, word_);
    const int t = length();
    const int n = sys_->rank();
    pos_.assign(sys_->size(), -1);
    for (int k = 0; k < t; ++k) {
        pos_[roots_[k]] = k;
        support_.set(roots_[k]);
    }

    // candidate predecessors: last earlier occurrence of each non-commuting node
    std::vector<int> last(n, -1);
    reach_.assign(t, {});
    std::vector<std::bitset<kMaxRoots>> into(t);  // positions reaching q
    for (int q = 0; q < t; ++q) {
        int i = word_[q];
        std::vector<int> cand;
        if (last[i] >= 0) cand.push_back(last[i]);
        for (int j : sys_->neighbors(i))
            if (last[j] >= 0) cand.push_back(last[j]);
        for (int p : cand) {
            into[q] |= into[p];
            into[q].set(p);
        }
        for (int p : cand) {
            bool redundant = false;
            for (int r : cand)
                if (r != p && into[r][p]) redundant = true;
            if (!redundant) covers_.emplace_back(p, q);
        }
        last[i] = q;
    }
    std::sort(covers_.begin(), covers_.end());
    for (int q = 0; q < t; ++q)
        for (int p = 0; p < q; ++p)
            if (into[q][p]) reach_[p].set(q);

    below_.assign(sys_->size(), {});
    above_.assign(sys_->size(), {});
    for (int p = 0; p < t; ++p)
        for (int q = p + 1; q < t; ++q)
            if (reach_[p][q]) {
                above_[roots_[p]].set(roots_[q]);
                below_[roots_[q]].set(roots_[p]);
            }
}

void CommClass::require(RootId r) const {
    if (r < 0 || r >= sys_->size() || pos_[r] < 0)
        throw RootNotInWord("root does not occur in the word");
}

bool CommClass::precedes(RootId a, RootId b) const {
    require(a);
    require(b);
    return above_[a][b];
}

std::vector<Word> enumerate_class(const CommClass& c, std::size_t cap) {
    const RootSystem& sys = c.system();
    std::set<Word> seen{c.word()};
    std::deque<Word> queue{c.word()};
    while (!queue.empty()) {
        Word w = std::move(queue.front());
        queue.pop_front();
        for (size_t k = 0; k + 1 < w.size(); ++k) {
            if (w[k] == w[k + 1] || sys.adjacent(w[k], w[k + 1])) continue;
            std::swap(w[k], w[k + 1]);
            if (seen.insert(w).second) {
                if (seen.size() > cap) throw ClassTooLarge(seen.size());
                queue.push_back(w);
            }
            std::swap(w[k], w[k + 1]);
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace arq
