#pragma once

#include <stdexcept>
#include <vector>

#include "csieve/partition.hpp"
#include "csieve/tableau.hpp"

namespace csieve {

// Tableau counts explode; sweeps must fail loudly instead of hanging.
inline constexpr long long kDefaultCap = 10'000'000;

class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(long long cap);
    long long cap;
};

// Complete, duplicate-free enumeration of SST_n(shape), sorted in the
// canonical (row reading word) order. Empty when length(shape) > n; the
// empty shape yields the single empty tableau.
std::vector<Tableau> enumerate_sst(const Partition& shape, int n,
                                   long long cap = kDefaultCap);

// The subset of SST_n(shape) with the given content (length-n vector).
std::vector<Tableau> enumerate_sst_with_content(const Partition& shape, int n,
                                                const Content& alpha,
                                                long long cap = kDefaultCap);

struct ContSets {
    std::vector<Content> all;         // cont(shape): every realized content
    std::vector<Content> decreasing;  // cont+(shape): the weakly decreasing ones
};

ContSets cont_sets(const Partition& shape, int n, long long cap = kDefaultCap);

}  // namespace csieve
