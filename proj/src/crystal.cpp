#include "csieve/crystal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace csieve {

SignatureStats signature_stats(const Tableau& t, int i) {
    if (i < 1 || i >= t.bound()) {
        throw std::invalid_argument("crystal index out of range");
    }
    SignatureStats stats;
    std::vector<std::pair<int, int>> open;  // unmatched i+1 cells so far
    for (int r = t.num_rows(); r >= 1; --r) {
        for (int c = 1; c <= t.row_length(r); ++c) {
            int v = t.at(r, c);
            if (v == i + 1) {
                open.emplace_back(r, c);
            } else if (v == i) {
                if (!open.empty()) {
                    open.pop_back();  // cancels the nearest preceding i+1
                } else {
                    stats.surviving_low.emplace_back(r, c);
                }
            }
        }
    }
    stats.surviving_high = std::move(open);
    stats.phi = static_cast<int>(stats.surviving_low.size());
    stats.eps = static_cast<int>(stats.surviving_high.size());
    return stats;
}

namespace {

Tableau with_cell(const Tableau& t, std::pair<int, int> cell, int value) {
    auto rows = t.rows();
    rows[static_cast<std::size_t>(cell.first) - 1][static_cast<std::size_t>(cell.second) - 1] = value;
    return Tableau(std::move(rows), t.bound());
}

}  // namespace

std::optional<Tableau> f_op(const Tableau& t, int i) {
    SignatureStats stats = signature_stats(t, i);
    if (stats.phi == 0) return std::nullopt;
    return with_cell(t, stats.surviving_low.back(), i + 1);
}

std::optional<Tableau> e_op(const Tableau& t, int i) {
    SignatureStats stats = signature_stats(t, i);
    if (stats.eps == 0) return std::nullopt;
    return with_cell(t, stats.surviving_high.front(), i);
}

CrystalElement make_element(Tableau t) {
    WeightVector weight = t.content();
    return CrystalElement{std::move(t), std::move(weight)};
}

CrystalElement s_op(CrystalElement element, int i) {
    int k = element.weight[static_cast<std::size_t>(i) - 1] -
            element.weight[static_cast<std::size_t>(i)];
    for (int step = 0; step < (k >= 0 ? k : -k); ++step) {
        auto next = k >= 0 ? f_op(element.tableau, i) : e_op(element.tableau, i);
        if (!next) throw std::logic_error("crystal reflection ran out of operator moves");
        element.tableau = std::move(*next);
    }
    std::swap(element.weight[static_cast<std::size_t>(i) - 1],
              element.weight[static_cast<std::size_t>(i)]);
    return element;
}

Tableau s_op(const Tableau& t, int i) {
    return s_op(make_element(t), i).tableau;
}

Tableau c_op(const Tableau& t) {
    CrystalElement element = make_element(t);
    for (int i = t.bound() - 1; i >= 1; --i) {
        element = s_op(std::move(element), i);
    }
    return element.tableau;
}

long long ev(const WeightVector& beta) {
    long long sum = std::accumulate(beta.begin(), beta.end(), 0LL);
    if (sum != 0) {
        throw std::invalid_argument("ev is defined on the root lattice only");
    }
    long long partial = 0;
    long long total = 0;
    for (std::size_t k = 0; k + 1 < beta.size(); ++k) {
        partial += beta[k];
        total += partial;
    }
    return total;
}

WeightVector highest_weight(const Partition& shape, int n) {
    if (shape.length() > n) {
        throw std::invalid_argument("shape has more rows than the alphabet");
    }
    WeightVector w(static_cast<std::size_t>(n), 0);
    for (int k = 1; k <= shape.length(); ++k) {
        w[static_cast<std::size_t>(k) - 1] = shape.part(k);
    }
    return w;
}

long long ev_from_highest(const Partition& shape, const Tableau& t) {
    int n = t.bound();
    Content c = t.content();
    long long total = 0;
    for (int k = 1; k <= n; ++k) {
        total += static_cast<long long>(n - k) *
                 (shape.part(k) - c[static_cast<std::size_t>(k) - 1]);
    }
    return total;
}

LaurentPoly qdim(const Partition& shape, int n, long long cap) {
    LaurentPoly out;
    for (const Tableau& t : enumerate_sst(shape, n, cap)) {
        out.add_term(static_cast<int>(ev_from_highest(shape, t)), 1);
    }
    return out;
}

std::vector<OrbitC> orbit_decomposition_c(const Partition& shape, int n, long long cap) {
    std::vector<Tableau> all = enumerate_sst(shape, n, cap);
    std::vector<bool> visited(all.size(), false);
    std::vector<OrbitC> orbits;
    for (std::size_t start = 0; start < all.size(); ++start) {
        if (visited[start]) continue;
        OrbitC orbit;
        orbit.representative = all[start];
        Tableau current = all[start];
        while (true) {
            auto it = std::lower_bound(all.begin(), all.end(), current);
            std::size_t idx = static_cast<std::size_t>(it - all.begin());
            visited[idx] = true;
            orbit.elements.push_back(current);
            orbit.ev_values.push_back(ev_from_highest(shape, current));
            current = c_op(current);
            if (current == all[start]) break;
        }
        if (n % static_cast<int>(orbit.elements.size()) != 0) {
            throw std::logic_error("coxeter orbit length does not divide n");
        }
        orbit.stabilizer_order = n / static_cast<int>(orbit.elements.size());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

}  // namespace csieve
