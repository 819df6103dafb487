#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "csieve/cyclotomic.hpp"
#include "csieve/enumerate.hpp"
#include "csieve/laurent.hpp"
#include "csieve/partition.hpp"
#include "csieve/qpolynomials.hpp"
#include "csieve/tableau.hpp"

namespace csieve {

class KostkaCache;

// A cyclic action on a finite tableau set: the carrier in canonical
// order, a named generator, and the group order. Verification checks
// that the generator is a bijection of the carrier and that
// generator^declared_order is the identity before trusting either.
struct CyclicActionSpec {
    std::vector<Tableau> carrier;
    std::string generator_name;
    std::function<Tableau(const Tableau&)> generator;
    int declared_order = 1;
};

CyclicActionSpec make_c_action(const Partition& shape, int n, long long cap = kDefaultCap);
CyclicActionSpec make_prn_action_on_content(const Partition& shape, int n,
                                            const Content& alpha,
                                            long long cap = kDefaultCap);

// Verdict and evidence of a cyclic sieving check. Route one builds the
// orbit-stabilizer census polynomial sum a_l q^l and compares it with
// the candidate modulo q^n - 1; route two counts fixed points of every
// power and compares them with exact root-of-unity evaluations. The two
// routes are independent implementations of the same definition and the
// report records whether they agreed.
struct SievingReport {
    bool verdict = false;
    bool routes_agree = false;
    std::map<int, long long> orbit_census;      // orbit size -> count
    std::vector<long long> stabilizer_census;   // a_l, l = 0..order-1
    LaurentPoly residue_poly;                   // sum a_l q^l
    LaurentPoly candidate_reduced;              // f mod q^order - 1
    std::vector<long long> fixed_point_table;   // k -> #fixed(generator^k)
    std::vector<CyclotomicValue> evaluations;   // k -> f(omega^k), exact
};

SievingReport verify_csp(const CyclicActionSpec& spec, const LaurentPoly& f);

// The content-class check for a hook shape: SST_n(shape, alpha) under
// pr^n with the q-binomial [nz(alpha)-1 choose m]_q, plus the closed
// form for the order (1 when nz = m+1, otherwise nz-1).
struct ContentClassReport {
    bool precondition_ok = false;
    std::string note;
    long long closed_form_order = 0;
    long long actual_order = 0;
    bool order_matches = false;
    SievingReport csp;
    bool verdict = false;  // order_matches and csp.verdict
};

ContentClassReport verify_csp_content_class(const Partition& shape, int n,
                                            const Content& alpha,
                                            long long cap = kDefaultCap);

// All orbits of the Coxeter rotation must be free when gcd(n,|shape|)=1
// and length(shape) < n; hypothesis violations are reported, not turned
// into verdicts.
struct FreeOrbitReport {
    bool precondition_ok = false;
    std::string note;
    bool all_free = false;
    long long free_orbits = 0;
    long long fixed_points = 0;
    std::map<int, long long> orbit_census;
};

FreeOrbitReport verify_free_orbits(const Partition& shape, int n,
                                   long long cap = kDefaultCap);

// Bicyclic sieving for a hook shape: the fixed-point matrix of
// (c^a, pr^{bn}) against the exact evaluation of the bivariate sieving
// polynomial at (omega_n^a, omega_o^b), entry by entry, plus the
// structural facts the argument rests on (no mixed fixed points for
// a != 0, pr-orbit size = product-orbit size, t = 1 slice equals the
// shifted principal specialization).
struct BiSievingReport {
    bool precondition_ok = false;
    std::string note;
    bool verdict = false;
    int n = 0;
    long long prn_order = 1;
    std::vector<std::vector<long long>> fixed_point_matrix;     // [a][b]
    std::vector<std::vector<CyclotomicValue>> evaluation_matrix;
    BivariatePoly sieving_poly;
    bool matrix_matches = false;
    bool zero_rows_for_nonzero_a = false;
    bool pr_orbit_sizes_match = false;
    bool t_one_slice_matches = false;
    bool commutation_holds = false;
};

BiSievingReport verify_bicsp_hook(const Partition& shape, int n,
                                  long long cap = kDefaultCap,
                                  KostkaCache* cache = nullptr);

// Substitute q -> q^d; lifts a sieving polynomial along a surjection of
// cyclic groups with kernel of size d.
LaurentPoly pullback_rescale(const LaurentPoly& f, int d);

}  // namespace csieve
