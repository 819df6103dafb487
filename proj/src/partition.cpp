#include "csieve/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace csieve {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size() && (text[pos] == ' ')) ++pos;
    if (pos >= text.size() || text == "-") {
        return Partition{};
    }
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        std::string token(text.substr(pos, next == std::string_view::npos ? next : next - pos));
        // trim spaces
        token.erase(std::remove(token.begin(), token.end(), ' '), token.end());
        if (token.empty()) {
            throw std::invalid_argument("empty part in partition text");
        }
        std::size_t used = 0;
        int value = std::stoi(token, &used);
        if (used != token.size()) {
            throw std::invalid_argument("bad partition part: " + token);
        }
        parts.push_back(value);
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return Partition(std::move(parts));
}

int Partition::part(int k) const noexcept {
    if (k < 1 || k > length()) return 0;
    return parts_[static_cast<std::size_t>(k) - 1];
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition{};
    std::vector<int> conj(static_cast<std::size_t>(parts_[0]), 0);
    for (int row : parts_) {
        for (int c = 0; c < row; ++c) ++conj[static_cast<std::size_t>(c)];
    }
    return Partition(std::move(conj));
}

long long Partition::kappa() const noexcept {
    long long total = 0;
    for (int k = 1; k <= length(); ++k) {
        total += static_cast<long long>(k - 1) * part(k);
    }
    return total;
}

long long Partition::sigma() const noexcept {
    long long total = 0;
    for (int k = 1; k <= length(); ++k) {
        total += static_cast<long long>(k) * (k - 1) / 2 * part(k);
    }
    return total;
}

bool Partition::is_hook() const noexcept {
    if (parts_.empty()) return false;
    for (std::size_t i = 1; i < parts_.size(); ++i) {
        if (parts_[i] != 1) return false;
    }
    return true;
}

bool Partition::is_two_column() const noexcept {
    return !parts_.empty() && parts_[0] <= 2;
}

bool Partition::dominates(const Partition& other) const noexcept {
    if (size_ != other.size_) return false;
    long long a = 0, b = 0;
    int rows = std::max(length(), other.length());
    for (int k = 1; k <= rows; ++k) {
        a += part(k);
        b += other.part(k);
        if (a < b) return false;
    }
    return true;
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> acc;
    gen_partitions(n, n == 0 ? 1 : n, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_up_to(int max_size) {
    std::vector<Partition> out;
    for (int n = 1; n <= max_size; ++n) {
        auto ps = partitions_of(n);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

}  // namespace csieve
