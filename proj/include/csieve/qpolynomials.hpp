#pragma once

#include <map>

#include "csieve/enumerate.hpp"
#include "csieve/laurent.hpp"
#include "csieve/partition.hpp"
#include "csieve/tableau.hpp"

namespace csieve {

class KostkaCache;

// Principal specialization s_shape(1, q, ..., q^{n-1}): the sum over
// SST_n(shape) of q^{sum_k (k-1) c_k}. Equals q^kappa(shape) times the
// graded crystal count, which the tests cross-check.
LaurentPoly schur_principal(const Partition& shape, int n, long long cap = kDefaultCap);

// Staircase specialization s_shape(1, q, q^3, q^6, ...): x_k = q^{k(k-1)/2}.
LaurentPoly schur_staircase(const Partition& shape, int n, long long cap = kDefaultCap);

// Monomial symmetric polynomial m_mu(1, q, ..., q^{n-1}): the sum over
// distinct rearrangements beta of mu (padded to length n) of
// q^{sum_k (k-1) beta_k}. Throws when length(mu) > n.
LaurentPoly monomial_principal(const Partition& mu, int n);

// Gaussian binomial [a choose b]_q; the zero polynomial when b > a.
LaurentPoly q_binomial(int a, int b);

// Lascoux-Schutzenberger charge of a tableau whose content is a
// partition. The word reads rows top to bottom, right to left; standard
// subwords are extracted by cyclic leftward scans starting from the
// rightmost 1, and each contributes the sum of its letter indices
// (index of 1 is 0; passing to r+1 adds 1 exactly when r+1 sits left
// of r).
long long charge(const Tableau& t);
long long charge_of_word(const std::vector<int>& word);

// Kostka-Foulkes polynomial: sum of t^charge over SST(shape, mu).
// Requires |shape| = |mu|; zero unless shape dominates mu.
LaurentPoly kostka_foulkes(const Partition& shape, const Partition& mu,
                           KostkaCache* cache = nullptr);

// Orders of pr^n and its restrictions, as computed by the promotion
// module; keys are the partitions obtained from weakly decreasing
// contents.
struct PrnOrders {
    long long total = 1;                // order of pr^n on SST_n(shape)
    std::map<Partition, long long> by_mu;  // order of pr^n restricted to content mu
};

// The bicyclic sieving polynomial for a hook shape (N-m, 1^m):
//   q^{-kappa(shape)} sum_{mu |- N} t^{A_mu} K_{shape,mu}(t^{total/o_mu})
//                                   m_mu(1, q, ..., q^{n-1})
// with A_mu = (total/o_mu) (-kappa(mu) + m len(mu) - m(m+1)/2). Terms
// with empty SST_n(shape, mu) vanish and are skipped. Throws unless the
// shape is a hook with gcd(n, N) = 1, or if some o_mu fails to divide
// the total order.
BivariatePoly sieving_poly_bivariate(const Partition& shape, int n,
                                     const PrnOrders& orders,
                                     KostkaCache* cache = nullptr);

}  // namespace csieve
