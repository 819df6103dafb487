#include "csieve/crystal.hpp"

#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include "test_support.hpp"

using csieve::Content;
using csieve::LaurentPoly;
using csieve::Partition;
using csieve::Tableau;
using csieve::WeightVector;

int main() {
    // sl_2 chain on a single row: [1,1] -> [1,2] -> [2,2]
    Tableau row11 = Tableau::parse("1 1", 2);
    Tableau row12 = Tableau::parse("1 2", 2);
    Tableau row22 = Tableau::parse("2 2", 2);
    auto stats = csieve::signature_stats(row12, 1);
    CHECK(stats.eps == 1 && stats.phi == 1);
    CHECK(csieve::f_op(row11, 1) == row12);
    CHECK(csieve::f_op(row12, 1) == row22);
    CHECK(!csieve::f_op(row22, 1).has_value());
    CHECK(csieve::e_op(row12, 1) == row11);
    CHECK(csieve::e_op(row22, 1) == row12);
    CHECK(!csieve::e_op(row11, 1).has_value());

    // highest-weight tableau of any shape: row k filled with k, all eps = 0
    for (const Partition& shape : csieve::partitions_up_to(6)) {
        int n = shape.length() + 1;
        std::vector<std::vector<int>> rows;
        for (int r = 1; r <= shape.length(); ++r) {
            rows.emplace_back(shape.part(r), r);
        }
        Tableau highest(rows, n);
        for (int i = 1; i < n; ++i) {
            CHECK(csieve::signature_stats(highest, i).eps == 0);
            CHECK(!csieve::e_op(highest, i).has_value());
        }
    }

    // lowest weight of a single box, n = 2
    Tableau box2 = Tableau::parse("2", 2);
    auto low = csieve::signature_stats(box2, 1);
    CHECK(low.phi == 0 && low.eps == 1);
    CHECK(!csieve::f_op(box2, 1).has_value());

    // column of weight zero
    Tableau column12 = Tableau::parse("1/2", 2);
    CHECK(!csieve::f_op(column12, 1).has_value());
    CHECK(!csieve::e_op(column12, 1).has_value());

    // phi - eps = c_i - c_{i+1} on a full crystal
    for (const Tableau& t : csieve::enumerate_sst(Partition({3, 2}), 4)) {
        Content c = t.content();
        for (int i = 1; i < 4; ++i) {
            auto s = csieve::signature_stats(t, i);
            CHECK(s.phi - s.eps == c[i - 1] - c[i]);
        }
    }

    // reflections: fixed point for balanced weight, single box, and the
    // four-row example with <h_3, wt> = 1
    CHECK(csieve::s_op(column12, 1) == column12);
    CHECK(csieve::s_op(Tableau::parse("1", 2), 1) == Tableau::parse("2", 2));
    Tableau witness = Tableau::parse("1 1 4/2 3/3", 4);
    Tableau reflected = csieve::s_op(witness, 3);
    CHECK(reflected.content() == Content({2, 1, 1, 2}));
    CHECK(reflected == Tableau::parse("1 1 4/2 4/3", 4));
    // weight postcondition: wt(s_i T) = s_i(wt T)
    for (const Tableau& t : csieve::enumerate_sst(Partition({2, 1}), 3)) {
        for (int i = 1; i < 3; ++i) {
            Content before = t.content();
            Content after = csieve::s_op(t, i).content();
            std::swap(before[i - 1], before[i]);
            CHECK(after == before);
        }
    }

    // the cached weight tracks the content through reflections
    for (const Tableau& t : csieve::enumerate_sst(Partition({2, 2, 1}), 4)) {
        csieve::CrystalElement element = csieve::make_element(t);
        CHECK(element.weight == t.content());
        for (int i = 1; i < 4; ++i) {
            element = csieve::s_op(std::move(element), i);
            CHECK(element.weight == element.tableau.content());
        }
    }

    // Coxeter rotation: n = 2 reduces to the single reflection
    CHECK(csieve::c_op(Tableau::parse("1", 2)) == Tableau::parse("2", 2));
    // content shifts cyclically, coordinate k to k+1 mod n
    for (const Tableau& t : csieve::enumerate_sst(Partition({2, 2, 1}), 4)) {
        Content c = t.content();
        Content rotated(c.size());
        for (std::size_t k = 0; k < c.size(); ++k) {
            rotated[(k + 1) % c.size()] = c[k];
        }
        CHECK(csieve::c_op(t).content() == rotated);
    }
    // order n on the whole crystal
    for (const Tableau& start : csieve::enumerate_sst(Partition({2, 1}), 4)) {
        Tableau t = start;
        for (int k = 0; k < 4; ++k) t = csieve::c_op(t);
        CHECK(t == start);
    }

    // ev: the height map on the root lattice
    CHECK(csieve::ev(WeightVector({1, -1, 0})) == 1);   // alpha_1, n = 3
    CHECK(csieve::ev(WeightVector({0, 1, -1})) == 1);   // alpha_2
    CHECK(csieve::ev(WeightVector({1, 0, -1})) == 2);   // alpha_1 + alpha_2
    bool threw = false;
    try {
        csieve::ev(WeightVector({1, 0, 0}));
    } catch (const std::invalid_argument&) {
        threw = true;
    }
    CHECK(threw);
    // c(alpha_{n-1}) = -(alpha_1 + ... + alpha_{n-1}): ev = -(n-1), 1 mod n
    for (int n = 2; n <= 7; ++n) {
        WeightVector beta(static_cast<std::size_t>(n), 0);
        beta[0] = -1;
        beta[static_cast<std::size_t>(n) - 1] = 1;  // alpha_{n-1} rotated: -e_1 + e_n
        long long value = csieve::ev(beta);
        CHECK(value == -(n - 1));
        CHECK(((value % n) + n) % n == 1);
    }
    // ev(c(beta)) = ev(beta) mod n on random root-lattice vectors
    std::srand(3);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + std::rand() % 6;
        WeightVector beta(static_cast<std::size_t>(n), 0);
        for (int k = 0; k + 1 < n; ++k) {
            int b = std::rand() % 9 - 4;
            beta[static_cast<std::size_t>(k)] += b;
            beta[static_cast<std::size_t>(k) + 1] -= b;
        }
        WeightVector rotated(beta.size());
        for (std::size_t k = 0; k < beta.size(); ++k) {
            rotated[(k + 1) % beta.size()] = beta[k];
        }
        CHECK(((csieve::ev(rotated) - csieve::ev(beta)) % n + n) % n == 0);
    }
    // ev(Lambda - c(Lambda)) = |shape| mod n
    for (const Partition& shape : csieve::partitions_up_to(6)) {
        for (int n = shape.length() + 1; n <= 6; ++n) {
            WeightVector lambda = csieve::highest_weight(shape, n);
            WeightVector rotated(lambda.size());
            for (std::size_t k = 0; k < lambda.size(); ++k) {
                rotated[(k + 1) % lambda.size()] = lambda[k];
            }
            WeightVector diff(lambda.size());
            for (std::size_t k = 0; k < lambda.size(); ++k) diff[k] = lambda[k] - rotated[k];
            CHECK(((csieve::ev(diff) - shape.size()) % n + n) % n == 0);
        }
    }

    // graded counts
    CHECK(csieve::qdim(Partition({1}), 2) == LaurentPoly::parse("1 + 1*q"));
    CHECK(csieve::qdim(Partition({2, 1}), 3) ==
          LaurentPoly::parse("1 + 2*q + 2*q^2 + 2*q^3 + 1*q^4"));
    CHECK(csieve::qdim(Partition({2, 1, 1, 1}), 5) ==
          LaurentPoly::parse("1 + 2*q + 3*q^2 + 4*q^3 + 4*q^4 + 4*q^5 + 3*q^6 + 2*q^7 + 1*q^8"));

    // orbit decomposition of the Coxeter rotation
    auto orbits21 = csieve::orbit_decomposition_c(Partition({2, 1}), 4);
    for (const auto& orbit : orbits21) {
        CHECK(orbit.elements.size() == 4 && orbit.stabilizer_order == 1);
    }
    auto orbits_box = csieve::orbit_decomposition_c(Partition({1}), 3);
    CHECK(orbits_box.size() == 1 && orbits_box[0].elements.size() == 3);

    auto orbits_adj = csieve::orbit_decomposition_c(Partition({2, 1, 1, 1}), 5);
    int free_orbits = 0, fixed_points = 0;
    for (const auto& orbit : orbits_adj) {
        if (orbit.elements.size() == 5) ++free_orbits;
        if (orbit.elements.size() == 1) ++fixed_points;
        CHECK(static_cast<int>(orbit.elements.size()) * orbit.stabilizer_order == 5);
        // representative is the least element
        for (const Tableau& t : orbit.elements) CHECK(!(t < orbit.representative));
    }
    CHECK(free_orbits == 4 && fixed_points == 4);

    // free orbits carry a complete residue system of ev values mod n
    for (const auto& orbit : orbits21) {
        std::set<long long> residues;
        for (long long e : orbit.ev_values) residues.insert(((e % 4) + 4) % 4);
        CHECK(residues.size() == 4);
    }

    return test_summary("crystal_test");
}
