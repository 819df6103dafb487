#pragma once

#include <string>
#include <vector>

#include "csieve/laurent.hpp"

namespace csieve {

int euler_phi(int n);

// Coefficients of the L-th cyclotomic polynomial, ascending, monic.
// Memoized; computed by exact division of x^L - 1 by the proper-divisor
// cyclotomics.
const std::vector<long long>& cyclotomic_polynomial(int order);

// An element of Z[xi_L] in reduced form modulo Phi_L. Root-of-unity
// evaluations stay exact, so sieving verdicts are integer equalities
// rather than tolerance checks. The value is an integer iff every
// coefficient above the constant one vanishes.
class CyclotomicValue {
public:
    CyclotomicValue(int order, std::vector<long long> coeffs);
    static CyclotomicValue zero(int order);

    // f(xi_d) for the canonical primitive d-th root of unity.
    static CyclotomicValue evaluate(const LaurentPoly& f, int root_order);
    // f(xi_L^power); power may be any integer.
    static CyclotomicValue evaluate_power(const LaurentPoly& f, int order, long long power);
    // f(xi_L^q_power, xi_L^t_power).
    static CyclotomicValue evaluate(const BivariatePoly& f, int order,
                                    long long q_power, long long t_power);

    int order() const noexcept { return order_; }
    const std::vector<long long>& coeffs() const noexcept { return coeffs_; }

    bool is_integer() const noexcept;
    long long integer_value() const;  // throws std::logic_error when not integer

    std::string to_string() const;  // polynomial in "w" (the root of unity)

    friend bool operator==(const CyclotomicValue&, const CyclotomicValue&) = default;

private:
    int order_ = 1;
    std::vector<long long> coeffs_;  // size deg Phi_L = phi(L)
};

}  // namespace csieve
