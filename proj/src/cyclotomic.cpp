#include "csieve/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace csieve {

int euler_phi(int n) {
    if (n < 1) throw std::invalid_argument("euler_phi needs n >= 1");
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// Exact division of polynomials with integer coefficients, ascending
// order, divisor monic. Remainder must vanish.
std::vector<long long> divide_exact(std::vector<long long> num,
                                    const std::vector<long long>& den) {
    std::vector<long long> quot(num.size() - den.size() + 1, 0);
    for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
        long long lead = num[static_cast<std::size_t>(i) + den.size() - 1];
        quot[static_cast<std::size_t>(i)] = lead;
        for (std::size_t j = 0; j < den.size(); ++j) {
            num[static_cast<std::size_t>(i) + j] -= lead * den[j];
        }
    }
    for (long long c : num) {
        if (c != 0) throw std::logic_error("inexact cyclotomic division");
    }
    return quot;
}

std::map<int, std::vector<long long>> phi_cache;
std::mutex phi_mutex;

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(int order) {
    if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
    std::lock_guard<std::mutex> lock(phi_mutex);
    auto it = phi_cache.find(order);
    if (it != phi_cache.end()) return it->second;
    // fill the cache bottom-up so recursion is never needed under the lock
    for (int l = 1; l <= order; ++l) {
        if (phi_cache.count(l)) continue;
        std::vector<long long> num(static_cast<std::size_t>(l) + 1, 0);
        num[0] = -1;
        num[static_cast<std::size_t>(l)] = 1;  // x^l - 1
        std::vector<long long> acc{1};
        for (int d = 1; d < l; ++d) {
            if (l % d != 0) continue;
            const auto& phi_d = phi_cache.at(d);
            std::vector<long long> next(acc.size() + phi_d.size() - 1, 0);
            for (std::size_t i = 0; i < acc.size(); ++i) {
                for (std::size_t j = 0; j < phi_d.size(); ++j) {
                    next[i + j] += acc[i] * phi_d[j];
                }
            }
            acc = std::move(next);
        }
        phi_cache.emplace(l, divide_exact(std::move(num), acc));
    }
    return phi_cache.at(order);
}

CyclotomicValue::CyclotomicValue(int order, std::vector<long long> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    std::size_t deg = cyclotomic_polynomial(order_).size() - 1;
    if (coeffs_.size() != deg) {
        throw std::invalid_argument("cyclotomic value has wrong coefficient count");
    }
}

CyclotomicValue CyclotomicValue::zero(int order) {
    std::size_t deg = cyclotomic_polynomial(order).size() - 1;
    return CyclotomicValue(order, std::vector<long long>(deg, 0));
}

namespace {

CyclotomicValue reduce_residues(int order, std::vector<long long> residues) {
    const auto& phi = cyclotomic_polynomial(order);
    std::size_t deg = phi.size() - 1;
    for (std::size_t i = residues.size(); i-- > deg;) {
        long long lead = residues[i];
        if (lead == 0) continue;
        residues[i] = 0;
        for (std::size_t j = 0; j < deg; ++j) {
            residues[i - deg + j] -= lead * phi[j];
        }
    }
    residues.resize(deg);
    return CyclotomicValue(order, std::move(residues));
}

}  // namespace

CyclotomicValue CyclotomicValue::evaluate(const LaurentPoly& f, int root_order) {
    return evaluate_power(f, root_order, 1);
}

CyclotomicValue CyclotomicValue::evaluate_power(const LaurentPoly& f, int order,
                                                long long power) {
    std::vector<long long> residues(static_cast<std::size_t>(order), 0);
    for (const auto& [e, c] : f.terms()) {
        long long r = (static_cast<long long>(e) * power) % order;
        if (r < 0) r += order;
        residues[static_cast<std::size_t>(r)] += c;
    }
    return reduce_residues(order, std::move(residues));
}

CyclotomicValue CyclotomicValue::evaluate(const BivariatePoly& f, int order,
                                          long long q_power, long long t_power) {
    std::vector<long long> residues(static_cast<std::size_t>(order), 0);
    for (const auto& [k, c] : f.terms()) {
        long long r = (static_cast<long long>(k.first) * q_power +
                       static_cast<long long>(k.second) * t_power) % order;
        if (r < 0) r += order;
        residues[static_cast<std::size_t>(r)] += c;
    }
    return reduce_residues(order, std::move(residues));
}

bool CyclotomicValue::is_integer() const noexcept {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) return false;
    }
    return true;
}

long long CyclotomicValue::integer_value() const {
    if (!is_integer()) throw std::logic_error("cyclotomic value is not an integer");
    return coeffs_.empty() ? 0 : coeffs_[0];
}

std::string CyclotomicValue::to_string() const {
    LaurentPoly p;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        p.add_term(static_cast<int>(i), coeffs_[i]);
    }
    return p.to_string('w');
}

}  // namespace csieve
