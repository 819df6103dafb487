#pragma once

#include <map>
#include <string>
#include <string_view>

namespace csieve {

// Exact integer-coefficient Laurent polynomial in one variable; the
// currency of every sieving check. The coefficient map is canonical (no
// stored zeros), so equality is map equality.
class LaurentPoly {
public:
    LaurentPoly() = default;  // zero
    static LaurentPoly constant(long long c);
    static LaurentPoly monomial(long long c, int e);

    bool is_zero() const noexcept { return terms_.empty(); }
    long long coeff(int e) const noexcept;
    const std::map<int, long long>& terms() const noexcept { return terms_; }
    int min_exp() const;  // both require a nonzero polynomial
    int max_exp() const;
    long long eval_at_one() const noexcept;

    void add_term(int e, long long c);

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { a -= b; return a; }

    LaurentPoly times_monomial(long long c, int e) const;
    LaurentPoly substitute_power(int d) const;  // q -> q^d, d >= 1

    // Text form: "c0 + c1*q + c2*q^2 + ...", ascending exponents,
    // negative coefficients rendered with "- ", exponent 1 as plain "q".
    std::string to_string(char var = 'q') const;
    static LaurentPoly parse(std::string_view text, char var = 'q');

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    std::map<int, long long> terms_;
};

// Representative of f modulo q^n - 1 with exponents in [0, n).
LaurentPoly reduce_mod_qn_minus_1(const LaurentPoly& f, int n);

// 1 + q + ... + q^{n-1}.
LaurentPoly geometric_sum(int n);

// Exact integer-coefficient polynomial in q and t, Laurent in both.
class BivariatePoly {
public:
    BivariatePoly() = default;
    static BivariatePoly from_q(const LaurentPoly& f);
    static BivariatePoly from_t(const LaurentPoly& f);

    bool is_zero() const noexcept { return terms_.empty(); }
    long long coeff(int qe, int te) const noexcept;
    const std::map<std::pair<int, int>, long long>& terms() const noexcept { return terms_; }

    void add_term(int qe, int te, long long c);

    BivariatePoly& operator+=(const BivariatePoly& rhs);
    BivariatePoly operator*(const BivariatePoly& rhs) const;
    BivariatePoly times_monomial(long long c, int qe, int te) const;

    LaurentPoly at_t_one() const;  // partial evaluation t = 1

    std::string to_string() const;
    static BivariatePoly parse(std::string_view text);

    friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

private:
    std::map<std::pair<int, int>, long long> terms_;
};

}  // namespace csieve
