#include "csieve/tableau.hpp"

#include <sstream>
#include <stdexcept>

namespace csieve {

Content content_from_partition(const Partition& mu, int n) {
    if (mu.length() > n) {
        throw std::invalid_argument("content_from_partition: length exceeds n");
    }
    Content alpha(static_cast<std::size_t>(n), 0);
    for (int k = 1; k <= mu.length(); ++k) {
        alpha[static_cast<std::size_t>(k) - 1] = mu.part(k);
    }
    return alpha;
}

Partition partition_from_content(const Content& alpha) {
    std::vector<int> parts;
    bool zero_seen = false;
    for (int v : alpha) {
        if (v < 0) throw std::invalid_argument("negative content entry");
        if (v == 0) {
            zero_seen = true;
        } else {
            if (zero_seen) {
                throw std::invalid_argument("content is not weakly decreasing");
            }
            parts.push_back(v);
        }
    }
    return Partition(std::move(parts));  // rejects non-decreasing prefixes
}

std::string content_to_string(const Content& alpha) {
    std::string out;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(alpha[i]);
    }
    return out;
}

bool is_semistandard(const std::vector<std::vector<int>>& rows, int bound) noexcept {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty()) return false;
        if (r > 0 && rows[r].size() > rows[r - 1].size()) return false;
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            int v = rows[r][c];
            if (v < 1 || v > bound) return false;
            if (c > 0 && rows[r][c - 1] > v) return false;
            if (r > 0 && rows[r - 1][c] >= v) return false;
        }
    }
    return true;
}

Tableau::Tableau(std::vector<std::vector<int>> rows, int alphabet_bound)
    : rows_(std::move(rows)), bound_(alphabet_bound) {
    if (bound_ < 0) throw std::invalid_argument("alphabet bound must be nonnegative");
    if (!rows_.empty() && !is_semistandard(rows_, bound_)) {
        throw std::invalid_argument("not a semistandard filling");
    }
}

Tableau Tableau::parse(std::string_view text, int alphabet_bound) {
    std::vector<std::vector<int>> rows;
    std::string buffer(text);
    for (char& ch : buffer) {
        if (ch == '/') ch = '\n';
    }
    std::istringstream lines(buffer);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream cells(line);
        std::vector<int> row;
        std::string token;
        while (cells >> token) {
            std::size_t used = 0;
            int value = std::stoi(token, &used);
            if (used != token.size()) {
                throw std::invalid_argument("bad tableau entry: " + token);
            }
            row.push_back(value);
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return Tableau(std::move(rows), alphabet_bound);
}

int Tableau::at(int r, int c) const noexcept {
    if (r < 1 || r > num_rows()) return 0;
    const auto& row = rows_[static_cast<std::size_t>(r) - 1];
    if (c < 1 || c > static_cast<int>(row.size())) return 0;
    return row[static_cast<std::size_t>(c) - 1];
}

int Tableau::row_length(int r) const noexcept {
    if (r < 1 || r > num_rows()) return 0;
    return static_cast<int>(rows_[static_cast<std::size_t>(r) - 1].size());
}

Partition Tableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

Content Tableau::content() const {
    Content counts(static_cast<std::size_t>(bound_), 0);
    for (const auto& row : rows_) {
        for (int v : row) ++counts[static_cast<std::size_t>(v) - 1];
    }
    return counts;
}

std::strong_ordering operator<=>(const Tableau& a, const Tableau& b) {
    std::size_t ra = a.rows_.size(), rb = b.rows_.size();
    std::size_t ia = 0, ib = 0;  // column cursor within the current row
    std::size_t qa = ra, qb = rb;  // current row, counting down
    while (true) {
        while (qa > 0 && ia == a.rows_[qa - 1].size()) {
            --qa;
            ia = 0;
        }
        while (qb > 0 && ib == b.rows_[qb - 1].size()) {
            --qb;
            ib = 0;
        }
        bool ea = qa == 0, eb = qb == 0;
        if (ea || eb) {
            if (ea != eb) return ea ? std::strong_ordering::less : std::strong_ordering::greater;
            break;
        }
        int va = a.rows_[qa - 1][ia++];
        int vb = b.rows_[qb - 1][ib++];
        if (va != vb) return va < vb ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    return a.bound_ <=> b.bound_;
}

std::string Tableau::to_string() const {
    std::string out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r > 0) out += '\n';
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c > 0) out += ' ';
            out += std::to_string(rows_[r][c]);
        }
    }
    return out;
}

}  // namespace csieve
