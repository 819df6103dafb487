#include "csieve/enumerate.hpp"

#include <algorithm>
#include <set>

namespace csieve {

CapExceeded::CapExceeded(long long limit)
    : std::runtime_error("tableau cardinality cap exceeded (" + std::to_string(limit) + ")"),
      cap(limit) {}

namespace {

// Column-by-column backtracking. Cell (r,c) needs entry > cell above and
// >= cell to the left, and at most n - (column height below it) so the
// rest of the column stays fillable. Contents are tracked for the
// restricted enumeration.
struct Enumerator {
    const Partition& shape;
    int n;
    const Content* target;  // nullptr for unrestricted
    long long cap;
    std::vector<int> conj;                  // column heights
    std::vector<std::vector<int>> grid;     // grid[r][c], 0-based
    Content remaining;                      // target minus used, when restricted
    std::vector<Tableau>* out;

    void run() {
        for (int r = 0; r < shape.length(); ++r) {
            grid.emplace_back(static_cast<std::size_t>(shape.part(r + 1)), 0);
        }
        fill_column(0, 0);
    }

    void fill_column(int c, int r) {
        if (c == static_cast<int>(conj.size())) {
            emit();
            return;
        }
        if (r == conj[static_cast<std::size_t>(c)]) {
            fill_column(c + 1, 0);
            return;
        }
        int lo = 1;
        if (r > 0) lo = std::max(lo, grid[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c)] + 1);
        if (c > 0) lo = std::max(lo, grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c) - 1]);
        int hi = n - (conj[static_cast<std::size_t>(c)] - 1 - r);
        for (int v = lo; v <= hi; ++v) {
            if (target != nullptr) {
                int& left = remaining[static_cast<std::size_t>(v) - 1];
                if (left == 0) continue;
                --left;
                grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
                fill_column(c, r + 1);
                ++left;
            } else {
                grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
                fill_column(c, r + 1);
            }
        }
    }

    void emit() {
        if (static_cast<long long>(out->size()) >= cap) throw CapExceeded(cap);
        out->emplace_back(grid, n);
    }
};

}  // namespace

std::vector<Tableau> enumerate_sst(const Partition& shape, int n, long long cap) {
    std::vector<Tableau> out;
    if (shape.length() > n) return out;
    if (shape.empty()) {
        out.emplace_back(std::vector<std::vector<int>>{}, n);
        return out;
    }
    std::vector<int> conj = shape.conjugate().parts();
    Enumerator e{shape, n, nullptr, cap, std::move(conj), {}, {}, &out};
    e.run();
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Tableau> enumerate_sst_with_content(const Partition& shape, int n,
                                                const Content& alpha, long long cap) {
    if (static_cast<int>(alpha.size()) != n) {
        throw std::invalid_argument("content vector must have length n");
    }
    std::vector<Tableau> out;
    if (shape.length() > n) return out;
    long long total = 0;
    for (int v : alpha) {
        if (v < 0) throw std::invalid_argument("negative content entry");
        total += v;
    }
    if (total != shape.size()) return out;
    if (shape.empty()) {
        out.emplace_back(std::vector<std::vector<int>>{}, n);
        return out;
    }
    std::vector<int> conj = shape.conjugate().parts();
    Enumerator e{shape, n, &alpha, cap, std::move(conj), {}, alpha, &out};
    e.run();
    std::sort(out.begin(), out.end());
    return out;
}

ContSets cont_sets(const Partition& shape, int n, long long cap) {
    std::set<Content> seen;
    for (const Tableau& t : enumerate_sst(shape, n, cap)) {
        seen.insert(t.content());
    }
    ContSets result;
    for (const Content& alpha : seen) {
        result.all.push_back(alpha);
        if (std::is_sorted(alpha.begin(), alpha.end(), std::greater<int>())) {
            result.decreasing.push_back(alpha);
        }
    }
    return result;
}

}  // namespace csieve
