#include "csieve/promotion.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

#include "csieve/crystal.hpp"
#include "test_support.hpp"

using csieve::Content;
using csieve::Partition;
using csieve::Tableau;

int main() {
    // Bender-Knuth basics
    Tableau paired = Tableau::parse("1/2", 3);
    CHECK(csieve::bender_knuth(paired, 1) == paired);  // vertically paired pair
    CHECK(csieve::bender_knuth(Tableau::parse("1 1 2", 3), 1) == Tableau::parse("1 2 2", 3));
    for (const Tableau& t : csieve::enumerate_sst(Partition({3, 2, 1}), 4)) {
        for (int i = 1; i < 4; ++i) {
            Tableau once = csieve::bender_knuth(t, i);
            // involution, and content transforms by the transposition
            CHECK(csieve::bender_knuth(once, i) == t);
            Content expect = t.content();
            std::swap(expect[i - 1], expect[i]);
            CHECK(once.content() == expect);
        }
    }

    // the worked slide: (1 1 2 / 3 3 4 / 4) -> (1 1 3 / 2 2 4 / 4), n = 4
    Tableau slide_in = Tableau::parse("1 1 2/3 3 4/4", 4);
    Tableau slide_out = Tableau::parse("1 1 3/2 2 4/4", 4);
    std::vector<csieve::PromotionFrame> frames;
    CHECK(csieve::promote(slide_in, &frames) == slide_out);
    // dotted frames: start, after the first hole, after the second
    CHECK(frames.size() == 3);
    using Grid = std::vector<std::vector<int>>;
    CHECK(frames[0].grid == Grid({{1, 1, 2}, {3, 3, 0}, {0}}));
    CHECK(frames[1].grid == Grid({{0, 1, 2}, {1, 3, 0}, {3}}));
    CHECK(frames[2].grid == Grid({{0, 0, 2}, {1, 1, 3}, {3}}));

    // no entry equal to n: plain increment
    CHECK(csieve::promote(Tableau::parse("1 2/2", 3)) == Tableau::parse("2 3/3", 3));

    // promotion equals the Bender-Knuth composite, exactly, everywhere
    for (const Partition& shape : csieve::partitions_up_to(6)) {
        for (int n = shape.length(); n <= 5; ++n) {
            if (n < 1) continue;
            for (const Tableau& t : csieve::enumerate_sst(shape, n)) {
                CHECK_MSG(csieve::promote(t) == csieve::promote_via_bender_knuth(t),
                          "shape=%s n=%d", shape.to_string().c_str(), n);
            }
        }
    }

    // content shifts cyclically under promotion
    for (const Tableau& t : csieve::enumerate_sst(Partition({3, 1}), 4)) {
        Content c = t.content();
        Content rotated(c.size());
        for (std::size_t k = 0; k < c.size(); ++k) rotated[(k + 1) % c.size()] = c[k];
        CHECK(csieve::promote(t).content() == rotated);
    }

    // powers, and the Example 5.7 cycles at n = 6
    Tableau start = Tableau::parse("1 1/2 2/3 4/5", 6);
    CHECK(csieve::promote_power(start, 0) == start);
    CHECK(csieve::promote_power(start, 6) == Tableau::parse("1 1/2 2/3 5/4", 6));
    CHECK(csieve::promote_power(start, 12) == start);
    Tableau alpha3_rep = Tableau::parse("1 1/2 3/4 5/6", 6);
    CHECK(csieve::promote_power(alpha3_rep, 12) == alpha3_rep);

    // per-content orders of pr^n, lambda = (2,2,2,1), n = 6
    Partition stack({2, 2, 2, 1});
    CHECK(csieve::order_of_prn_on_content(stack, 6, Content({2, 2, 2, 1, 0, 0})) == 1);
    CHECK(csieve::order_of_prn_on_content(stack, 6, Content({2, 2, 1, 1, 1, 0})) == 2);
    CHECK(csieve::order_of_prn_on_content(stack, 6, Content({2, 1, 1, 1, 1, 1})) == 6);
    bool threw = false;
    try {
        csieve::order_of_prn_on_content(stack, 6, Content({7, 0, 0, 0, 0, 0}));
    } catch (const std::invalid_argument&) {
        threw = true;
    }
    CHECK(threw);

    // total orders
    CHECK(csieve::order_of_pr(stack, 6) == 36);
    CHECK(csieve::order_of_pr_bruteforce(stack, 6) == 36);
    CHECK(csieve::order_of_pr(Partition({3, 1}), 3) == 6);   // hook, n > m+1
    CHECK(csieve::order_of_pr_bruteforce(Partition({3, 1}), 3) == 6);
    CHECK(csieve::order_of_pr_bruteforce(Partition({2, 1}), 2) == 2);  // n = m+1
    auto report = csieve::pr_orders(stack, 6);
    CHECK(report.factored_formula_valid);
    CHECK(report.total_order_prn == 6);
    CHECK(report.total_order_pr == 36);
    CHECK(report.per_content.size() == 3);
    CHECK(report.per_content.at(Content({2, 2, 2, 1, 0, 0})) == 1);
    CHECK(report.per_content.at(Content({2, 2, 1, 1, 1, 0})) == 2);
    CHECK(report.per_content.at(Content({2, 1, 1, 1, 1, 1})) == 6);

    // orbit lengths are divisible by n when gcd(n, size) = 1
    for (const auto& orbit : csieve::pr_orbits(Partition({3, 1}), 3)) {
        CHECK(orbit.length % 3 == 0);
    }

    // pr^2 commutation with the outer reflections
    CHECK(csieve::check_pr2_commutation(Partition({3, 1}), 4).holds);
    CHECK(csieve::check_pr2_commutation(Partition({2, 2, 1}), 4).holds);
    auto broken = csieve::check_pr2_commutation(Partition({3, 2, 1}), 4);
    CHECK(!broken.holds);
    CHECK(broken.counterexample == Tableau::parse("1 1 4/2 3/3", 4));
    CHECK(broken.lhs == Tableau::parse("1 2 3/2 3/4", 4));  // s_1 . pr^2
    CHECK(broken.rhs == Tableau::parse("1 2 3/2 4/3", 4));  // pr^2 . s_3

    // the lowering operators do not commute the same way, n = 3
    auto f_broken = csieve::check_f_pr2_commutation(Partition({2, 1}), 3);
    CHECK(!f_broken.holds);
    CHECK(f_broken.counterexample == Tableau::parse("1 2/2", 3));
    CHECK(f_broken.lhs == Tableau::parse("1 2/3", 3));  // f_1 . pr^2
    CHECK(f_broken.rhs == Tableau::parse("1 3/2", 3));  // pr^2 . f_2
    // ... but both-null pairs agree: the two-box crystal at n = 2
    CHECK(csieve::check_f_pr2_commutation(Partition({1}), 2).holds);

    // pr^n commutes with every reflection on hooks and two-column shapes
    CHECK(csieve::check_prn_si_commutation(Partition({3, 1}), 4).holds);
    CHECK(csieve::check_prn_si_commutation(Partition({2, 2, 1}), 5).holds);
    CHECK(csieve::check_prn_si_commutation(stack, 6).holds);

    return test_summary("promotion_test");
}
