#include "csieve/qpolynomials.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "csieve/kostka_cache.hpp"

namespace csieve {

namespace {

LaurentPoly specialize(const Partition& shape, int n, long long cap,
                       const std::vector<long long>& exponent_of_entry) {
    LaurentPoly out;
    for (const Tableau& t : enumerate_sst(shape, n, cap)) {
        Content c = t.content();
        long long e = 0;
        for (int k = 1; k <= n; ++k) {
            e += exponent_of_entry[static_cast<std::size_t>(k) - 1] *
                 c[static_cast<std::size_t>(k) - 1];
        }
        out.add_term(static_cast<int>(e), 1);
    }
    return out;
}

}  // namespace

LaurentPoly schur_principal(const Partition& shape, int n, long long cap) {
    std::vector<long long> exps(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) exps[static_cast<std::size_t>(k) - 1] = k - 1;
    return specialize(shape, n, cap, exps);
}

LaurentPoly schur_staircase(const Partition& shape, int n, long long cap) {
    std::vector<long long> exps(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        exps[static_cast<std::size_t>(k) - 1] = static_cast<long long>(k) * (k - 1) / 2;
    }
    return specialize(shape, n, cap, exps);
}

LaurentPoly monomial_principal(const Partition& mu, int n) {
    if (mu.length() > n) {
        throw std::invalid_argument("monomial_principal: length(mu) > n");
    }
    std::vector<int> beta(static_cast<std::size_t>(n), 0);
    for (int k = 1; k <= mu.length(); ++k) beta[static_cast<std::size_t>(k) - 1] = mu.part(k);
    std::sort(beta.begin(), beta.end());
    LaurentPoly out;
    do {
        long long e = 0;
        for (int k = 1; k <= n; ++k) {
            e += static_cast<long long>(k - 1) * beta[static_cast<std::size_t>(k) - 1];
        }
        out.add_term(static_cast<int>(e), 1);
    } while (std::next_permutation(beta.begin(), beta.end()));
    return out;
}

LaurentPoly q_binomial(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("q_binomial needs nonnegative arguments");
    if (b > a) return LaurentPoly{};
    // Pascal recurrence [a b] = [a-1 b-1] + q^b [a-1 b]
    std::vector<LaurentPoly> row{LaurentPoly::constant(1)};
    for (int i = 1; i <= a; ++i) {
        std::vector<LaurentPoly> next(static_cast<std::size_t>(std::min(i, b)) + 1);
        next[0] = LaurentPoly::constant(1);
        for (int j = 1; j <= std::min(i, b); ++j) {
            LaurentPoly value = row[static_cast<std::size_t>(j) - 1];
            if (j < static_cast<int>(row.size())) {
                value += row[static_cast<std::size_t>(j)].times_monomial(1, j);
            }
            next[static_cast<std::size_t>(j)] = std::move(value);
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(b)];
}

long long charge_of_word(const std::vector<int>& word) {
    if (word.empty()) return 0;
    int max_letter = *std::max_element(word.begin(), word.end());
    std::vector<int> mult(static_cast<std::size_t>(max_letter) + 1, 0);
    for (int v : word) {
        if (v < 1) throw std::invalid_argument("word letters must be positive");
        ++mult[static_cast<std::size_t>(v)];
    }
    for (int v = 2; v <= max_letter; ++v) {
        if (mult[static_cast<std::size_t>(v)] > mult[static_cast<std::size_t>(v) - 1]) {
            throw std::invalid_argument("charge needs a word of partition content");
        }
    }

    long long total = 0;
    std::vector<bool> used(word.size(), false);
    int remaining = static_cast<int>(word.size());
    while (remaining > 0) {
        // longest letter still present; content stays a partition as
        // copies are removed, so the subword takes letters 1..top
        int top = max_letter;
        while (top >= 1 && mult[static_cast<std::size_t>(top)] == 0) --top;

        // the subword takes the rightmost unused 1, then repeatedly the
        // next larger letter scanning rightward, cyclically
        std::vector<std::size_t> picked;  // position of each letter 1..top
        std::size_t pos = word.size();
        for (std::size_t i = word.size(); i-- > 0;) {
            if (!used[i] && word[i] == 1) {
                pos = i;
                break;
            }
        }
        if (pos == word.size()) throw std::logic_error("charge extraction failed");
        used[pos] = true;
        --mult[1];
        picked.push_back(pos);
        for (int letter = 2; letter <= top; ++letter) {
            std::size_t found = word.size();
            for (std::size_t step = 1; step <= word.size(); ++step) {
                std::size_t cursor = (pos + step) % word.size();
                if (!used[cursor] && word[cursor] == letter) {
                    found = cursor;
                    break;
                }
            }
            if (found == word.size()) throw std::logic_error("charge extraction failed");
            used[found] = true;
            --mult[static_cast<std::size_t>(letter)];
            picked.push_back(found);
            pos = found;
        }
        // indices: letter 1 has 0; moving to r+1 adds 1 iff r+1 is left of r
        long long index = 0;
        for (int letter = 2; letter <= top; ++letter) {
            if (picked[static_cast<std::size_t>(letter) - 1] <
                picked[static_cast<std::size_t>(letter) - 2]) {
                ++index;
            }
            total += index;
        }
        remaining -= top;
    }
    return total;
}

long long charge(const Tableau& t) {
    std::vector<int> word;
    for (int r = 1; r <= t.num_rows(); ++r) {
        for (int c = t.row_length(r); c >= 1; --c) word.push_back(t.at(r, c));
    }
    return charge_of_word(word);
}

LaurentPoly kostka_foulkes(const Partition& shape, const Partition& mu, KostkaCache* cache) {
    if (shape.size() != mu.size()) {
        throw std::invalid_argument("kostka_foulkes: |shape| != |mu|");
    }
    if (cache) {
        if (auto hit = cache->lookup(shape, mu)) return *hit;
    }
    LaurentPoly out;
    if (shape.dominates(mu)) {
        int n = std::max(mu.length(), 1);
        Content alpha = content_from_partition(mu, n);
        for (const Tableau& t : enumerate_sst_with_content(shape, n, alpha)) {
            out.add_term(static_cast<int>(charge(t)), 1);
        }
    }
    if (cache) cache->store(shape, mu, out);
    return out;
}

BivariatePoly sieving_poly_bivariate(const Partition& shape, int n,
                                     const PrnOrders& orders, KostkaCache* cache) {
    if (!shape.is_hook()) {
        throw std::invalid_argument("sieving polynomial needs a hook shape");
    }
    int big_n = shape.size();
    if (std::gcd(n, big_n) != 1) {
        throw std::invalid_argument("sieving polynomial needs gcd(n, |shape|) = 1");
    }
    int m = shape.length() - 1;
    BivariatePoly out;
    for (const Partition& mu : partitions_of(big_n)) {
        if (mu.length() > n || !shape.dominates(mu)) continue;  // empty class
        auto it = orders.by_mu.find(mu);
        if (it == orders.by_mu.end()) {
            throw std::invalid_argument("missing pr^n order for content " + mu.to_string());
        }
        long long o_mu = it->second;
        if (orders.total % o_mu != 0) {
            throw std::logic_error("content order does not divide the total order");
        }
        long long stretch = orders.total / o_mu;
        long long a_mu = stretch * (-mu.kappa() + static_cast<long long>(m) * mu.length() -
                                    static_cast<long long>(m) * (m + 1) / 2);
        LaurentPoly k = kostka_foulkes(shape, mu, cache).substitute_power(static_cast<int>(stretch));
        LaurentPoly mq = monomial_principal(mu, n);
        BivariatePoly term = BivariatePoly::from_t(k) * BivariatePoly::from_q(mq);
        out += term.times_monomial(1, 0, static_cast<int>(a_mu));
    }
    return out.times_monomial(1, static_cast<int>(-shape.kappa()), 0);
}

}  // namespace csieve
