#include "csieve/promotion.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "csieve/crystal.hpp"

namespace csieve {

Tableau bender_knuth(const Tableau& t, int i) {
    if (i < 1 || i >= t.bound()) {
        throw std::invalid_argument("bender_knuth index out of range");
    }
    auto rows = t.rows();
    int nrows = static_cast<int>(rows.size());
    auto cell = [&](int r, int c) -> int {
        if (r < 0 || r >= nrows) return 0;
        const auto& row = rows[static_cast<std::size_t>(r)];
        if (c < 0 || c >= static_cast<int>(row.size())) return 0;
        return row[static_cast<std::size_t>(c)];
    };
    for (int r = 0; r < nrows; ++r) {
        auto& row = rows[static_cast<std::size_t>(r)];
        int width = static_cast<int>(row.size());
        int free_lo = 0, free_hi = 0;
        int first = -1;
        for (int c = 0; c < width; ++c) {
            int v = row[static_cast<std::size_t>(c)];
            if (v == i && cell(r + 1, c) != i + 1) {
                if (first < 0) first = c;
                ++free_lo;
            } else if (v == i + 1 && cell(r - 1, c) != i) {
                if (first < 0) first = c;
                ++free_hi;
            }
        }
        // the free entries of a row form one contiguous run; rewrite it
        for (int k = 0; k < free_lo + free_hi; ++k) {
            row[static_cast<std::size_t>(first + k)] = k < free_hi ? i : i + 1;
        }
    }
    return Tableau(std::move(rows), t.bound());
}

Tableau promote(const Tableau& t, std::vector<PromotionFrame>* frames) {
    int n = t.bound();
    auto grid = t.rows();
    int nrows = static_cast<int>(grid.size());

    std::vector<std::pair<int, int>> holes;  // 0-based (row, col), one per column
    for (int r = 0; r < nrows; ++r) {
        auto& row = grid[static_cast<std::size_t>(r)];
        for (int c = 0; c < static_cast<int>(row.size()); ++c) {
            if (row[static_cast<std::size_t>(c)] == n) {
                row[static_cast<std::size_t>(c)] = 0;
                holes.emplace_back(r, c);
            }
        }
    }
    std::sort(holes.begin(), holes.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    if (frames && !holes.empty()) frames->push_back(PromotionFrame{grid});

    for (auto [r, c] : holes) {
        while (true) {
            int above = r > 0 ? grid[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c)] : 0;
            int left = c > 0 ? grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c) - 1] : 0;
            if (above == 0 && left == 0) break;  // walls or parked holes
            if (above >= left) {
                grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = above;
                grid[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c)] = 0;
                --r;
            } else {
                grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = left;
                grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c) - 1] = 0;
                --c;
            }
        }
        if (frames) frames->push_back(PromotionFrame{grid});
    }

    for (auto& row : grid) {
        for (auto& v : row) v = v == 0 ? 1 : v + 1;
    }
    return Tableau(std::move(grid), n);
}

Tableau promote_power(const Tableau& t, long long k) {
    Tableau result = t;
    for (long long step = 0; step < k; ++step) result = promote(result);
    return result;
}

Tableau promote_via_bender_knuth(const Tableau& t) {
    Tableau result = t;
    for (int i = t.bound() - 1; i >= 1; --i) result = bender_knuth(result, i);
    return result;
}

std::vector<PromotionOrbit> pr_orbits(const Partition& shape, int n, long long cap) {
    std::vector<Tableau> all = enumerate_sst(shape, n, cap);
    std::vector<bool> visited(all.size(), false);
    std::vector<PromotionOrbit> orbits;
    for (std::size_t start = 0; start < all.size(); ++start) {
        if (visited[start]) continue;
        PromotionOrbit orbit;
        orbit.representative = all[start];
        orbit.length = 0;
        Tableau current = all[start];
        do {
            auto it = std::lower_bound(all.begin(), all.end(), current);
            visited[static_cast<std::size_t>(it - all.begin())] = true;
            ++orbit.length;
            current = promote(current);
        } while (!(current == all[start]));
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

long long order_of_prn_on_content(const Partition& shape, int n, const Content& alpha,
                                  long long cap) {
    std::vector<Tableau> carrier = enumerate_sst_with_content(shape, n, alpha, cap);
    if (carrier.empty()) {
        throw std::invalid_argument("empty content class");
    }
    long long order = 1;
    std::vector<bool> visited(carrier.size(), false);
    for (std::size_t start = 0; start < carrier.size(); ++start) {
        if (visited[start]) continue;
        long long len = 0;
        Tableau current = carrier[start];
        do {
            auto it = std::lower_bound(carrier.begin(), carrier.end(), current);
            if (it == carrier.end() || !(*it == current)) {
                throw std::logic_error("pr^n left its content class");
            }
            visited[static_cast<std::size_t>(it - carrier.begin())] = true;
            ++len;
            current = promote_power(current, n);
        } while (!(current == carrier[start]));
        order = std::lcm(order, len);
    }
    return order;
}

OrderReport pr_orders(const Partition& shape, int n, long long cap) {
    OrderReport report;
    ContSets contents = cont_sets(shape, n, cap);
    long long lcm_all = 1;
    for (const Content& alpha : contents.all) {
        long long o = order_of_prn_on_content(shape, n, alpha, cap);
        lcm_all = std::lcm(lcm_all, o);
        if (std::is_sorted(alpha.begin(), alpha.end(), std::greater<int>())) {
            report.per_content.emplace(alpha, o);
        }
    }
    report.total_order_prn = lcm_all;
    report.factored_formula_valid =
        std::gcd(n, shape.size()) == 1 && check_prn_si_commutation(shape, n, cap).holds;
    report.total_order_pr = report.factored_formula_valid
                                ? n * report.total_order_prn
                                : order_of_pr_bruteforce(shape, n, cap);
    return report;
}

long long order_of_pr(const Partition& shape, int n, long long cap) {
    return pr_orders(shape, n, cap).total_order_pr;
}

long long order_of_pr_bruteforce(const Partition& shape, int n, long long cap) {
    long long order = 1;
    for (const PromotionOrbit& orbit : pr_orbits(shape, n, cap)) {
        order = std::lcm(order, static_cast<long long>(orbit.length));
    }
    return order;
}

namespace {

using PartialImage = std::optional<Tableau>;

CommutationReport sweep_commutation(
    const Partition& shape, int n, long long cap, int index,
    const std::function<PartialImage(const Tableau&)>& lhs,
    const std::function<PartialImage(const Tableau&)>& rhs,
    CommutationReport report = {}) {
    for (const Tableau& t : enumerate_sst(shape, n, cap)) {
        ++report.checked;
        PartialImage a = lhs(t);
        PartialImage b = rhs(t);
        if (a == b) continue;
        report.holds = false;
        report.index = index;
        report.counterexample = t;
        report.lhs = std::move(a);
        report.rhs = std::move(b);
        break;
    }
    return report;
}

}  // namespace

CommutationReport check_pr2_commutation(const Partition& shape, int n, long long cap) {
    if (n < 2) return {};
    return sweep_commutation(
        shape, n, cap, 1,
        [](const Tableau& t) { return PartialImage(s_op(promote_power(t, 2), 1)); },
        [n](const Tableau& t) { return PartialImage(promote_power(s_op(t, n - 1), 2)); });
}

CommutationReport check_f_pr2_commutation(const Partition& shape, int n, long long cap) {
    if (n < 2) return {};
    return sweep_commutation(
        shape, n, cap, 1,
        [](const Tableau& t) -> PartialImage {
            return f_op(promote_power(t, 2), 1);
        },
        [n](const Tableau& t) -> PartialImage {
            auto mid = f_op(t, n - 1);
            if (!mid) return std::nullopt;
            return promote_power(*mid, 2);
        });
}

CommutationReport check_prn_si_commutation(const Partition& shape, int n, long long cap) {
    CommutationReport report;
    for (int i = 1; i < n && report.holds; ++i) {
        report = sweep_commutation(
            shape, n, cap, i,
            [n, i](const Tableau& t) { return PartialImage(s_op(promote_power(t, n), i)); },
            [n, i](const Tableau& t) { return PartialImage(promote_power(s_op(t, i), n)); },
            std::move(report));
    }
    return report;
}

}  // namespace csieve
