#pragma once

#include <map>
#include <optional>
#include <vector>

#include "csieve/enumerate.hpp"
#include "csieve/partition.hpp"
#include "csieve/tableau.hpp"

namespace csieve {

// Bender-Knuth involution at index i: in every row, rewrite the run of
// free i's and free (i+1)'s so their multiplicities swap. An entry i is
// free when no i+1 sits directly below it; an i+1 is free when no i
// sits directly above it. Transforms the content by the transposition
// (i, i+1).
Tableau bender_knuth(const Tableau& t, int i);

// Snapshot of the grid mid-slide; 0 marks a vacated cell.
struct PromotionFrame {
    std::vector<std::vector<int>> grid;
};

// Jeu-de-taquin promotion. Entries equal to n are vacated and the holes
// slide to the northwest corner, taken left to right; a hole swaps with
// the larger of its upper and left neighbors (upper wins ties, which is
// the only choice that preserves column strictness). Vacated cells then
// become 1's and every other entry increases by 1. When frames is
// non-null, the dotted grid after each hole's slide is recorded.
Tableau promote(const Tableau& t, std::vector<PromotionFrame>* frames = nullptr);

Tableau promote_power(const Tableau& t, long long k);

// The same operator as the composite of Bender-Knuth involutions,
// sigma_1 applied last. Kept separate from the slide implementation so
// the two routes can be compared exactly.
Tableau promote_via_bender_knuth(const Tableau& t);

struct PromotionOrbit {
    Tableau representative;  // lexicographically least member
    int length = 1;          // least k >= 1 with pr^k fixing the orbit pointwise
};

// Orbits of pr on SST_n(shape), representatives ascending.
std::vector<PromotionOrbit> pr_orbits(const Partition& shape, int n,
                                      long long cap = kDefaultCap);

// Least k >= 1 with (pr^n)^k the identity on SST_n(shape, alpha).
// Throws std::invalid_argument when the content class is empty.
long long order_of_prn_on_content(const Partition& shape, int n, const Content& alpha,
                                  long long cap = kDefaultCap);

struct OrderReport {
    std::map<Content, long long> per_content;  // alpha in cont+ -> order of pr^n|_alpha
    long long total_order_pr = 1;
    long long total_order_prn = 1;
    bool factored_formula_valid = false;  // gcd(n,|shape|)=1 and pr^n commutes with every s_i
};

OrderReport pr_orders(const Partition& shape, int n, long long cap = kDefaultCap);

// Exact order of pr on SST_n(shape): n * lcm of the per-content orders
// when the factored form applies, otherwise the lcm of pr-orbit lengths.
long long order_of_pr(const Partition& shape, int n, long long cap = kDefaultCap);
long long order_of_pr_bruteforce(const Partition& shape, int n, long long cap = kDefaultCap);

// Elementwise commutation sweeps. The first counterexample in canonical
// order is reported together with both images; for the partial-operator
// sweep a both-null pair counts as agreeing. index records the crystal
// index at which the mismatch occurred (always 1 for the pr^2 checks).
struct CommutationReport {
    bool holds = true;
    long long checked = 0;
    int index = 0;
    std::optional<Tableau> counterexample;
    std::optional<Tableau> lhs;  // image under the left composite, when defined
    std::optional<Tableau> rhs;
};

// s_1 . pr^2 versus pr^2 . s_{n-1}.
CommutationReport check_pr2_commutation(const Partition& shape, int n,
                                        long long cap = kDefaultCap);

// f_1 . pr^2 versus pr^2 . f_{n-1}.
CommutationReport check_f_pr2_commutation(const Partition& shape, int n,
                                          long long cap = kDefaultCap);

// s_i . pr^n versus pr^n . s_i for every i.
CommutationReport check_prn_si_commutation(const Partition& shape, int n,
                                           long long cap = kDefaultCap);

}  // namespace csieve
