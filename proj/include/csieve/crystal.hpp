#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "csieve/enumerate.hpp"
#include "csieve/laurent.hpp"
#include "csieve/partition.hpp"
#include "csieve/tableau.hpp"

namespace csieve {

// Weights live in epsilon-coordinates: wt(T) = content(T). The pairing
// with the i-th simple coroot is coords[i-1] - coords[i], and the simple
// root alpha_i adds (0,...,+1,-1,...,0) at positions i, i+1.
using WeightVector = std::vector<int>;

// Raising/lowering data of the signature rule at index i. The reading
// word runs over rows bottom to top, left to right within a row; in the
// {i, i+1} subword every adjacent (i+1, i) pair cancels, repeatedly.
// What survives is i^phi (i+1)^eps. The lowering operator acts on the
// rightmost surviving i, the raising operator on the leftmost surviving
// i+1.
struct SignatureStats {
    int eps = 0;  // number of surviving i+1 letters
    int phi = 0;  // number of surviving i letters
    std::vector<std::pair<int, int>> surviving_low;   // cells (row,col) of surviving i, word order
    std::vector<std::pair<int, int>> surviving_high;  // cells of surviving i+1, word order
};

SignatureStats signature_stats(const Tableau& t, int i);

// Kashiwara operators; nullopt exactly when phi_i resp. eps_i vanishes.
std::optional<Tableau> f_op(const Tableau& t, int i);
std::optional<Tableau> e_op(const Tableau& t, int i);

// A tableau with its weight kept alongside; the cache always equals
// content(tableau). Reflections update the weight by a coordinate swap
// instead of recounting entries.
struct CrystalElement {
    Tableau tableau;
    WeightVector weight;
};

CrystalElement make_element(Tableau t);

// Weyl-group reflection on the crystal: f^k or e^{-k} with
// k = <h_i, wt> = c_i - c_{i+1}. An involution.
Tableau s_op(const Tableau& t, int i);
CrystalElement s_op(CrystalElement element, int i);

// Coxeter rotation s_1 s_2 ... s_{n-1}, rightmost factor applied first.
// Shifts the content cyclically (coordinate k moves to k+1 mod n) and
// has order n on any nonempty SST_n(shape).
Tableau c_op(const Tableau& t);

// Height of a root-lattice element: sum of the coefficients over the
// simple-root basis, i.e. the sum of partial sums of the epsilon
// coordinates. Rejects vectors with nonzero coordinate sum.
long long ev(const WeightVector& beta);

// Highest weight of SST_n(shape) in epsilon-coordinates: the parts of
// shape padded with zeros to length n.
WeightVector highest_weight(const Partition& shape, int n);

// ev(Lambda - wt(t)) = sum_k (n-k)(shape_k - c_k).
long long ev_from_highest(const Partition& shape, const Tableau& t);

// Graded count sum_T q^{ev(Lambda - wt(T))}; exact integer coefficients.
LaurentPoly qdim(const Partition& shape, int n, long long cap = kDefaultCap);

// One orbit of the Coxeter rotation. elements = [T, cT, c^2 T, ...] with
// T the lexicographically least member; |elements| * stabilizer_order = n.
struct OrbitC {
    Tableau representative;
    std::vector<Tableau> elements;
    int stabilizer_order = 1;
    std::vector<long long> ev_values;  // ev(Lambda - wt(S)) per element
};

std::vector<OrbitC> orbit_decomposition_c(const Partition& shape, int n,
                                          long long cap = kDefaultCap);

}  // namespace csieve
