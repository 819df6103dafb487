#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "csieve/partition.hpp"

namespace csieve {

// Content vector of a tableau: counts[k-1] = multiplicity of the entry k.
// Contents always carry full length n, trailing zeros included, because
// the cyclic actions permute all n coordinates.
using Content = std::vector<int>;

// Pad a partition to a length-n content vector. Throws if length(mu) > n.
Content content_from_partition(const Partition& mu, int n);

// Strip trailing zeros and reinterpret as a partition. Throws if the
// nonzero prefix is not weakly decreasing.
Partition partition_from_content(const Content& alpha);

std::string content_to_string(const Content& alpha);

// A semistandard tableau: rows weakly increase left to right, columns
// strictly increase top to bottom, entries in {1..n}. Immutable value.
class Tableau {
public:
    Tableau() = default;  // empty tableau, bound 0
    Tableau(std::vector<std::vector<int>> rows, int alphabet_bound);

    // Text form: one row per line, entries space-separated. Rows may
    // alternatively be separated by '/'. Round-trips with to_string().
    static Tableau parse(std::string_view text, int alphabet_bound);

    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    int bound() const noexcept { return bound_; }
    bool empty() const noexcept { return rows_.empty(); }
    int at(int r, int c) const noexcept;  // 1-based; 0 outside the shape
    int num_rows() const noexcept { return static_cast<int>(rows_.size()); }
    int row_length(int r) const noexcept;

    Partition shape() const;
    Content content() const;  // length bound()

    std::string to_string() const;

    // Canonical order: lexicographic on the row reading word (rows
    // bottom to top, left to right within a row), the same word the
    // crystal operators read. Representatives and first-counterexample
    // reports use this order everywhere.
    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend std::strong_ordering operator<=>(const Tableau& a, const Tableau& b);

private:
    std::vector<std::vector<int>> rows_;
    int bound_ = 0;
};

bool is_semistandard(const std::vector<std::vector<int>>& rows, int bound) noexcept;

}  // namespace csieve
