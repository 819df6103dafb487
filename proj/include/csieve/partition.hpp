#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace csieve {

// A partition, drawn as a Young diagram in English convention: weakly
// decreasing positive parts. The empty partition is legal and serves as
// the base case of recursive checks.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Text form: comma-separated parts, e.g. "3,3,1". The empty string
    // (or "-") parses to the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int part(int k) const noexcept;  // 1-based; 0 beyond the last row
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    Partition conjugate() const;

    // kappa = sum_k (k-1)*part_k, sigma = sum_k k(k-1)/2 * part_k; the
    // grading shifts of the principal and staircase specializations.
    long long kappa() const noexcept;
    long long sigma() const noexcept;

    bool is_hook() const noexcept;        // (N-m, 1^m) with m >= 0
    bool is_two_column() const noexcept;  // every part <= 2
    bool dominates(const Partition& other) const noexcept;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// All partitions of n, sorted lexicographically. partitions_of(0) is the
// singleton {empty}.
std::vector<Partition> partitions_of(int n);

// All nonempty partitions of sizes 1..max_size, sorted by (size, lex).
std::vector<Partition> partitions_up_to(int max_size);

}  // namespace csieve
