#include "csieve/qpolynomials.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "csieve/crystal.hpp"
#include "test_support.hpp"

using csieve::Content;
using csieve::LaurentPoly;
using csieve::Partition;
using csieve::Tableau;

namespace {

// Oracle: [a choose b]_q = sum over 1 <= s_1 < ... < s_b <= a of
// q^{sum (s_j - j)}, by explicit subset enumeration.
LaurentPoly q_binomial_by_subsets(int a, int b) {
    LaurentPoly out;
    std::vector<int> subset(static_cast<std::size_t>(b));
    for (int j = 0; j < b; ++j) subset[static_cast<std::size_t>(j)] = j + 1;
    if (b > a) return out;
    while (true) {
        int e = 0;
        for (int j = 0; j < b; ++j) e += subset[static_cast<std::size_t>(j)] - (j + 1);
        out.add_term(e, 1);
        int j = b - 1;
        while (j >= 0 && subset[static_cast<std::size_t>(j)] == a - (b - 1 - j)) --j;
        if (j < 0) break;
        ++subset[static_cast<std::size_t>(j)];
        for (int k = j + 1; k < b; ++k) {
            subset[static_cast<std::size_t>(k)] = subset[static_cast<std::size_t>(k) - 1] + 1;
        }
    }
    return out;
}

long long count_distinct_permutations(const Partition& mu, int n) {
    std::vector<int> beta(static_cast<std::size_t>(n), 0);
    for (int k = 1; k <= mu.length(); ++k) beta[static_cast<std::size_t>(k) - 1] = mu.part(k);
    std::sort(beta.begin(), beta.end());
    long long count = 0;
    do {
        ++count;
    } while (std::next_permutation(beta.begin(), beta.end()));
    return count;
}

}  // namespace

int main() {
    // principal specialization, shifted by kappa where the examples do
    Partition adjoint({2, 1, 1, 1});
    LaurentPoly principal = csieve::schur_principal(adjoint, 5);
    CHECK(principal.times_monomial(1, static_cast<int>(-adjoint.kappa())) ==
          LaurentPoly::parse(
              "1 + 2*q + 3*q^2 + 4*q^3 + 4*q^4 + 4*q^5 + 3*q^6 + 2*q^7 + 1*q^8"));
    CHECK(csieve::schur_principal(Partition({1}), 2) == LaurentPoly::parse("1 + 1*q"));
    CHECK(csieve::schur_principal(Partition({2, 1}), 3) ==
          LaurentPoly::parse("1*q + 2*q^2 + 2*q^3 + 2*q^4 + 1*q^5"));

    // cross-module identity: s_shape(1,q,...,q^{n-1}) = q^kappa qdim
    for (const Partition& shape : csieve::partitions_up_to(6)) {
        for (int n = std::max(1, shape.length()); n <= 5; ++n) {
            LaurentPoly lhs = csieve::schur_principal(shape, n);
            LaurentPoly rhs = csieve::qdim(shape, n).times_monomial(
                1, static_cast<int>(shape.kappa()));
            CHECK_MSG(lhs == rhs, "shape=%s n=%d", shape.to_string().c_str(), n);
        }
    }

    // staircase specialization
    LaurentPoly staircase = csieve::schur_staircase(adjoint, 5);
    CHECK(staircase.times_monomial(1, static_cast<int>(-adjoint.sigma())) ==
          LaurentPoly::parse("1 + 1*q + 1*q^3 + 1*q^4 + 1*q^5 + 1*q^6 + 2*q^7 + 1*q^8 + "
                             "1*q^9 + 4*q^10 + 1*q^11 + 1*q^12 + 2*q^13 + 1*q^14 + "
                             "1*q^15 + 1*q^16 + 1*q^17 + 1*q^19 + 1*q^20"));
    CHECK(csieve::schur_staircase(Partition({1}), 2) == LaurentPoly::parse("1 + 1*q"));
    CHECK(csieve::schur_staircase(Partition({1, 1}), 3) ==
          LaurentPoly::parse("1*q + 1*q^3 + 1*q^4"));

    // monomial specialization
    CHECK(csieve::monomial_principal(Partition({1}), 2) == LaurentPoly::parse("1 + 1*q"));
    CHECK(csieve::monomial_principal(Partition({2, 1}), 3) ==
          LaurentPoly::parse("1*q + 2*q^2 + 2*q^4 + 1*q^5"));
    for (int big = 1; big <= 4; ++big) {
        LaurentPoly expect;
        for (int k = 0; k < 4; ++k) expect.add_term(k * big, 1);
        CHECK(csieve::monomial_principal(Partition({big}), 4) == expect);
    }
    bool threw = false;
    try {
        csieve::monomial_principal(Partition({1, 1, 1}), 2);
    } catch (const std::invalid_argument&) {
        threw = true;
    }
    CHECK(threw);

    // sum over mu of K_{shape,mu}(1) |rearrangements of mu| = |SST_n(shape)|
    for (const Partition& shape : csieve::partitions_up_to(5)) {
        for (int n = shape.length(); n <= 4; ++n) {
            if (n < 1) continue;
            long long total = 0;
            for (const Partition& mu : csieve::partitions_of(shape.size())) {
                if (mu.length() > n) continue;
                total += csieve::kostka_foulkes(shape, mu).eval_at_one() *
                         count_distinct_permutations(mu, n);
            }
            CHECK_MSG(total == static_cast<long long>(csieve::enumerate_sst(shape, n).size()),
                      "shape=%s n=%d", shape.to_string().c_str(), n);
        }
    }

    // Gaussian binomials: frozen values, subset oracle, Pascal recurrence
    CHECK(csieve::q_binomial(2, 1) == LaurentPoly::parse("1 + 1*q"));
    CHECK(csieve::q_binomial(4, 2) == LaurentPoly::parse("1 + 1*q + 2*q^2 + 1*q^3 + 1*q^4"));
    CHECK(csieve::q_binomial(3, 0) == LaurentPoly::constant(1));
    CHECK(csieve::q_binomial(2, 5).is_zero());
    for (int a = 0; a <= 8; ++a) {
        for (int b = 0; b <= a; ++b) {
            CHECK(csieve::q_binomial(a, b) == q_binomial_by_subsets(a, b));
            if (a >= 1 && b >= 1) {
                LaurentPoly pascal = csieve::q_binomial(a - 1, b - 1) +
                                     csieve::q_binomial(a - 1, b).times_monomial(1, b);
                CHECK(csieve::q_binomial(a, b) == pascal);
            }
        }
    }

    // reduction: the two Remark polynomials mod q^5 - 1
    LaurentPoly target = LaurentPoly::parse("8 + 4*q + 4*q^2 + 4*q^3 + 4*q^4");
    LaurentPoly shifted_staircase =
        staircase.times_monomial(1, static_cast<int>(-adjoint.sigma()));
    LaurentPoly shifted_principal =
        principal.times_monomial(1, static_cast<int>(-adjoint.kappa()));
    CHECK(csieve::reduce_mod_qn_minus_1(shifted_staircase, 5) == target);
    CHECK(csieve::reduce_mod_qn_minus_1(shifted_principal, 5) != target);

    return test_summary("qpolynomials_test");
}
