#pragma once

#include <map>
#include <string>
#include <vector>

#include "arq/arquiver.hpp"
#include "arq/seqcalc.hpp"

namespace arq {

// prod_t (z - (-q)^t)^{mult}
struct DistancePolynomial {
    std::map<int, int> factors;

    void add(int t, int mult = 1) {
        if (mult > 0) factors[t] += mult;
    }
    int multiplicity(int t) const {
        auto it = factors.find(t);
        return it == factors.end() ? 0 : it->second;
    }
    int degree() const;
    friend bool operator==(const DistancePolynomial&, const DistancePolynomial&) = default;
};

// "(z-q^2)(z+q^3)^2", or "1" for the empty product
std::string format_polynomial(const DistancePolynomial& d);
std::string format_polynomial_latex(const DistancePolynomial& d);
DistancePolynomial parse_polynomial(const std::string& text);

// pairs comparable in Gamma_Q whose residues are {k, l} and whose coordinates differ by t
std::vector<RootPair> pairs_at(const ARQuiver& g, int k, int l, int t);

// gdist shared by all pairs at (k, l, t); every member is checked when check_all is set
int o_t(SequenceCalculus& calc, const ARQuiver& g, int k, int l, int t, bool check_all = true);

// all o_t(k, l) for one quiver, indexed [k][l] -> {t -> o_t}
class DistanceTable {
public:
    explicit DistanceTable(const DynkinQuiver& q, bool check_all = true);
    const DynkinQuiver& quiver() const { return quiver_; }
    int value(int k, int l, int t) const;
    const std::map<int, int>& row(int k, int l) const { return table_[k][l]; }

private:
    DynkinQuiver quiver_;
    std::vector<std::vector<std::map<int, int>>> table_;
};

// D^Q_{k,l} from the tables of Q and of its reverse
DistancePolynomial distance_polynomial(const DistanceTable& q, const DistanceTable& rev, int k, int l);
DistancePolynomial distance_polynomial(const DynkinQuiver& q, int k, int l);

// closed-form denominator root multiset of A_n^(1) / D_n^(1) for nodes k, l (0-based)
DistancePolynomial denominator_closed_form(Kind kind, int n, int k, int l);

struct DenominatorMismatch {
    int k, l;
    DistancePolynomial computed, expected;
};

// checks D_{k,l} * (z - (-q)^h)^{[l = k*]} against the closed form for every (k, l)
std::vector<DenominatorMismatch> verify_denominator(const DistanceTable& q, const DistanceTable& rev);
std::vector<DenominatorMismatch> verify_denominator(const DynkinQuiver& q);

struct TableEntry {
    int k, l;  // 0-based
    DistancePolynomial poly;
    bool correction;  // the (z - (-q)^h) factor for l = k* is included
};

// D_{k,l} with the correction factor, for k <= l
std::vector<TableEntry> conjecture_table(const DistanceTable& q, const DistanceTable& rev);
std::vector<TableEntry> conjecture_table(const DynkinQuiver& q);

}  // namespace arq
