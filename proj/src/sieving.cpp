#include "csieve/sieving.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "csieve/crystal.hpp"
#include "csieve/kostka_cache.hpp"
#include "csieve/promotion.hpp"

namespace csieve {

namespace {

// The generator as an index permutation of the sorted carrier; throws
// when the images leave the carrier or collide.
std::vector<std::size_t> permutation_of(const CyclicActionSpec& spec) {
    const auto& carrier = spec.carrier;
    std::vector<std::size_t> perm(carrier.size());
    std::vector<bool> hit(carrier.size(), false);
    for (std::size_t i = 0; i < carrier.size(); ++i) {
        Tableau image = spec.generator(carrier[i]);
        auto it = std::lower_bound(carrier.begin(), carrier.end(), image);
        if (it == carrier.end() || !(*it == image)) {
            throw std::invalid_argument("generator leaves the carrier set");
        }
        std::size_t j = static_cast<std::size_t>(it - carrier.begin());
        if (hit[j]) throw std::invalid_argument("generator is not a bijection");
        hit[j] = true;
        perm[i] = j;
    }
    return perm;
}

std::vector<std::size_t> power_of(const std::vector<std::size_t>& perm, long long k) {
    std::vector<std::size_t> out(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        std::size_t j = i;
        for (long long s = 0; s < k; ++s) j = perm[j];
        out[i] = j;
    }
    return out;
}

std::vector<long long> orbit_sizes(const std::vector<std::size_t>& perm) {
    std::vector<long long> sizes;
    std::vector<bool> visited(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (visited[i]) continue;
        long long len = 0;
        std::size_t j = i;
        do {
            visited[j] = true;
            ++len;
            j = perm[j];
        } while (j != i);
        sizes.push_back(len);
    }
    return sizes;
}

}  // namespace

CyclicActionSpec make_c_action(const Partition& shape, int n, long long cap) {
    CyclicActionSpec spec;
    spec.carrier = enumerate_sst(shape, n, cap);
    spec.generator_name = "c";
    spec.generator = [](const Tableau& t) { return c_op(t); };
    spec.declared_order = n;
    return spec;
}

CyclicActionSpec make_prn_action_on_content(const Partition& shape, int n,
                                            const Content& alpha, long long cap) {
    CyclicActionSpec spec;
    spec.carrier = enumerate_sst_with_content(shape, n, alpha, cap);
    spec.generator_name = "pr^" + std::to_string(n);
    spec.generator = [n](const Tableau& t) { return promote_power(t, n); };
    spec.declared_order =
        static_cast<int>(order_of_prn_on_content(shape, n, alpha, cap));
    return spec;
}

SievingReport verify_csp(const CyclicActionSpec& spec, const LaurentPoly& f) {
    const int order = spec.declared_order;
    if (order < 1) throw std::invalid_argument("declared order must be positive");
    std::vector<std::size_t> perm = permutation_of(spec);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        std::size_t j = i;
        for (int s = 0; s < order; ++s) j = perm[j];
        if (j != i) throw std::invalid_argument("declared order is wrong for the action");
    }

    SievingReport report;

    // route one: orbit-stabilizer census against f mod q^order - 1
    std::vector<long long> sizes = orbit_sizes(perm);
    for (long long s : sizes) ++report.orbit_census[static_cast<int>(s)];
    report.stabilizer_census.assign(static_cast<std::size_t>(order), 0);
    for (long long s : sizes) {
        long long stab = order / s;
        for (int l = 0; l < order; ++l) {
            if (l % stab == 0) ++report.stabilizer_census[static_cast<std::size_t>(l)];
        }
    }
    for (int l = 0; l < order; ++l) {
        report.residue_poly.add_term(l, report.stabilizer_census[static_cast<std::size_t>(l)]);
    }
    report.candidate_reduced = reduce_mod_qn_minus_1(f, order);
    bool route_one = report.residue_poly == report.candidate_reduced;

    // route two: fixed points of every power against exact evaluations
    bool route_two = true;
    std::vector<std::size_t> current(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) current[i] = i;
    for (int k = 0; k < order; ++k) {
        long long fixed = 0;
        for (std::size_t i = 0; i < perm.size(); ++i) {
            if (current[i] == i) ++fixed;
        }
        report.fixed_point_table.push_back(fixed);
        int g = std::gcd(order, k);
        int d = order / g;  // order of generator^k
        CyclotomicValue value = CyclotomicValue::evaluate_power(f, d, (k / g) % d);
        if (!value.is_integer() || value.integer_value() != fixed) route_two = false;
        report.evaluations.push_back(std::move(value));
        for (std::size_t i = 0; i < perm.size(); ++i) current[i] = perm[current[i]];
    }

    report.verdict = route_one && route_two;
    report.routes_agree = route_one == route_two;
    return report;
}

ContentClassReport verify_csp_content_class(const Partition& shape, int n,
                                            const Content& alpha, long long cap) {
    ContentClassReport report;
    if (!shape.is_hook()) {
        report.note = "shape is not a hook";
        return report;
    }
    if (std::gcd(n, shape.size()) != 1) {
        report.note = "gcd(n, |shape|) != 1";
        return report;
    }
    if (enumerate_sst_with_content(shape, n, alpha, cap).empty()) {
        report.note = "empty content class";
        return report;
    }
    CyclicActionSpec spec = make_prn_action_on_content(shape, n, alpha, cap);
    report.precondition_ok = true;
    int m = shape.length() - 1;
    int nz = static_cast<int>(std::count_if(alpha.begin(), alpha.end(),
                                            [](int v) { return v > 0; }));
    report.closed_form_order = nz == m + 1 ? 1 : nz - 1;
    report.actual_order = spec.declared_order;
    report.order_matches = report.closed_form_order == report.actual_order;
    report.csp = verify_csp(spec, q_binomial(nz - 1, m));
    report.verdict = report.order_matches && report.csp.verdict;
    return report;
}

FreeOrbitReport verify_free_orbits(const Partition& shape, int n, long long cap) {
    FreeOrbitReport report;
    report.precondition_ok = true;
    if (shape.length() > n) {
        report.note = "length(shape) exceeds n; no tableaux";
        report.precondition_ok = false;
        return report;
    }
    if (shape.length() == n) {
        report.note = "length(shape) is not < n";
        report.precondition_ok = false;
    } else if (std::gcd(n, shape.size()) != 1) {
        report.note = "gcd(n, |shape|) != 1";
        report.precondition_ok = false;
    }
    // the orbit census is informative even when the hypothesis fails
    report.all_free = true;
    for (const OrbitC& orbit : orbit_decomposition_c(shape, n, cap)) {
        ++report.orbit_census[static_cast<int>(orbit.elements.size())];
        if (static_cast<int>(orbit.elements.size()) == n) {
            ++report.free_orbits;
        } else {
            report.all_free = false;
            if (orbit.elements.size() == 1) ++report.fixed_points;
        }
    }
    return report;
}

BiSievingReport verify_bicsp_hook(const Partition& shape, int n, long long cap,
                                  KostkaCache* cache) {
    BiSievingReport report;
    report.n = n;
    if (!shape.is_hook()) {
        report.note = "shape is not a hook";
        return report;
    }
    if (std::gcd(n, shape.size()) != 1) {
        report.note = "gcd(n, |shape|) != 1";
        return report;
    }
    if (shape.length() >= n) {
        report.note = "length(shape) is not < n";
        return report;
    }
    report.precondition_ok = true;

    CyclicActionSpec c_action = make_c_action(shape, n, cap);
    const std::vector<Tableau>& carrier = c_action.carrier;
    std::vector<std::size_t> perm_c = permutation_of(c_action);

    CyclicActionSpec prn_action;
    prn_action.carrier = carrier;
    prn_action.generator = [n](const Tableau& t) { return promote_power(t, n); };
    std::vector<std::size_t> perm_prn = permutation_of(prn_action);

    OrderReport orders = pr_orders(shape, n, cap);
    report.commutation_holds = orders.factored_formula_valid;
    long long o = orders.total_order_prn;
    report.prn_order = o;

    PrnOrders poly_orders;
    poly_orders.total = o;
    for (const auto& [alpha, value] : orders.per_content) {
        poly_orders.by_mu.emplace(partition_from_content(alpha), value);
    }
    report.sieving_poly = sieving_poly_bivariate(shape, n, poly_orders, cache);

    // t = 1 slice must be the shifted principal specialization
    LaurentPoly principal =
        schur_principal(shape, n, cap).times_monomial(1, static_cast<int>(-shape.kappa()));
    report.t_one_slice_matches = report.sieving_poly.at_t_one() == principal;

    // fixed-point matrix of (c^a, pr^{bn}) against exact evaluations
    report.matrix_matches = true;
    report.zero_rows_for_nonzero_a = true;
    report.fixed_point_matrix.assign(static_cast<std::size_t>(n), {});
    report.evaluation_matrix.assign(static_cast<std::size_t>(n), {});
    for (int a = 0; a < n; ++a) {
        std::vector<std::size_t> ca = power_of(perm_c, a);
        for (long long b = 0; b < o; ++b) {
            std::vector<std::size_t> pb = power_of(perm_prn, b);
            long long fixed = 0;
            for (std::size_t i = 0; i < carrier.size(); ++i) {
                if (ca[pb[i]] == i) ++fixed;
            }
            report.fixed_point_matrix[static_cast<std::size_t>(a)].push_back(fixed);
            if (a != 0 && fixed != 0) report.zero_rows_for_nonzero_a = false;

            int d1 = n / std::gcd(n, a);
            long long g2 = std::gcd(o, b);
            long long d2 = o / g2;
            long long big = std::lcm(static_cast<long long>(d1), d2);
            long long qpow = (big / d1) * ((a / std::gcd(n, a)) % d1);
            long long tpow = (big / d2) * ((b / g2) % d2);
            CyclotomicValue value = CyclotomicValue::evaluate(
                report.sieving_poly, static_cast<int>(big), qpow, tpow);
            if (!value.is_integer() || value.integer_value() != fixed) {
                report.matrix_matches = false;
            }
            report.evaluation_matrix[static_cast<std::size_t>(a)].push_back(std::move(value));
        }
    }

    // |O_pr(T)| = |O_{C x P}(T)| for every element
    report.pr_orbit_sizes_match = true;
    for (std::size_t i = 0; i < carrier.size(); ++i) {
        long long pr_len = 0;
        Tableau current = carrier[i];
        do {
            ++pr_len;
            current = promote(current);
        } while (!(current == carrier[i]));
        // orbit of <c, pr^n> through i
        std::vector<std::size_t> stack{i};
        std::vector<bool> seen(carrier.size(), false);
        seen[i] = true;
        long long joint = 0;
        while (!stack.empty()) {
            std::size_t j = stack.back();
            stack.pop_back();
            ++joint;
            for (std::size_t k : {perm_c[j], perm_prn[j]}) {
                if (!seen[k]) {
                    seen[k] = true;
                    stack.push_back(k);
                }
            }
        }
        if (pr_len != joint) {
            report.pr_orbit_sizes_match = false;
            break;
        }
    }

    report.verdict = report.matrix_matches && report.t_one_slice_matches &&
                     report.zero_rows_for_nonzero_a && report.pr_orbit_sizes_match &&
                     report.commutation_holds;
    return report;
}

LaurentPoly pullback_rescale(const LaurentPoly& f, int d) {
    return f.substitute_power(d);
}

}  // namespace csieve
