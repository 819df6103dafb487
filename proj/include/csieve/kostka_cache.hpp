#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

#include "csieve/laurent.hpp"
#include "csieve/partition.hpp"

namespace csieve {

// Disk cache for Kostka-Foulkes polynomials, keyed by (shape, mu) and
// reused across sweeps. Single writer, many readers; all access goes
// through the internal mutex. File format (versioned):
//
//   csieve-kostka-cache 1
//   <shape>|<mu>|<polynomial text form>
//
// with "-" standing for the empty partition.
class KostkaCache {
public:
    KostkaCache() = default;
    explicit KostkaCache(std::filesystem::path file);

    std::optional<LaurentPoly> lookup(const Partition& shape, const Partition& mu) const;
    void store(const Partition& shape, const Partition& mu, const LaurentPoly& value);

    void load();        // no-op when the file does not exist
    void save() const;  // writes all entries; creates parent directories
    void clear();       // drops entries and removes the file

    std::size_t size() const;
    const std::filesystem::path& path() const noexcept { return file_; }

    // Default cache location: $CSIEVE_CACHE_DIR/kostka.cache, falling
    // back to ./csieve-cache/kostka.cache.
    static std::filesystem::path default_path();

private:
    std::filesystem::path file_;
    mutable std::mutex mutex_;
    std::map<std::pair<Partition, Partition>, LaurentPoly> entries_;
};

}  // namespace csieve
