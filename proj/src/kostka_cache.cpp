#include "csieve/kostka_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace csieve {

namespace {

constexpr const char* kMagic = "csieve-kostka-cache 1";

std::string partition_key(const Partition& p) {
    return p.empty() ? "-" : p.to_string();
}

}  // namespace

KostkaCache::KostkaCache(std::filesystem::path file) : file_(std::move(file)) {}

std::optional<LaurentPoly> KostkaCache::lookup(const Partition& shape,
                                               const Partition& mu) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = entries_.find({shape, mu});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void KostkaCache::store(const Partition& shape, const Partition& mu,
                        const LaurentPoly& value) {
    std::lock_guard<std::mutex> lock(mutex_);
    entries_.insert_or_assign({shape, mu}, value);
}

void KostkaCache::load() {
    if (file_.empty()) return;
    std::ifstream in(file_);
    if (!in) return;
    std::string line;
    if (!std::getline(in, line) || line != kMagic) {
        throw std::runtime_error("unrecognized kostka cache format: " + file_.string());
    }
    std::lock_guard<std::mutex> lock(mutex_);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::size_t p1 = line.find('|');
        std::size_t p2 = line.find('|', p1 == std::string::npos ? p1 : p1 + 1);
        if (p1 == std::string::npos || p2 == std::string::npos) {
            throw std::runtime_error("bad kostka cache record: " + line);
        }
        Partition shape = Partition::parse(line.substr(0, p1));
        Partition mu = Partition::parse(line.substr(p1 + 1, p2 - p1 - 1));
        LaurentPoly value = LaurentPoly::parse(line.substr(p2 + 1));
        entries_.insert_or_assign({std::move(shape), std::move(mu)}, std::move(value));
    }
}

void KostkaCache::save() const {
    if (file_.empty()) return;
    std::lock_guard<std::mutex> lock(mutex_);
    if (file_.has_parent_path()) {
        std::filesystem::create_directories(file_.parent_path());
    }
    std::ofstream out(file_, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write kostka cache: " + file_.string());
    out << kMagic << '\n';
    for (const auto& [key, value] : entries_) {
        out << partition_key(key.first) << '|' << partition_key(key.second) << '|'
            << value.to_string() << '\n';
    }
}

void KostkaCache::clear() {
    std::lock_guard<std::mutex> lock(mutex_);
    entries_.clear();
    if (!file_.empty()) {
        std::error_code ec;
        std::filesystem::remove(file_, ec);
    }
}

std::size_t KostkaCache::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return entries_.size();
}

std::filesystem::path KostkaCache::default_path() {
    if (const char* dir = std::getenv("CSIEVE_CACHE_DIR")) {
        return std::filesystem::path(dir) / "kostka.cache";
    }
    return std::filesystem::path("csieve-cache") / "kostka.cache";
}

}  // namespace csieve
