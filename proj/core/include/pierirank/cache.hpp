#pragma once

#include <optional>
#include <string>

namespace pierirank {

struct PieriTensor;

/// On-disk tensor cache.  Layout: <dir>/manifest.json plus one pair of
/// MatrixMarket files per entry, all writes temp-file-then-rename.
struct CacheConfig {
    std::string dir;
};

/// Resolution order: explicit flag, PIERI_RANK_CACHE, per-user cache dir.
CacheConfig default_cache(const std::string& flag_dir = "");

/// Key a tensor build by shape pair, U, n and the basis-order version.
std::string cache_key(const PieriTensor& t);

/// Loads f1/f2 when the manifest entry exists and the checksums match;
/// returns false (after warning on corruption) otherwise.
bool cache_try_load(const CacheConfig& cfg, PieriTensor& t);
void cache_store(const CacheConfig& cfg, const PieriTensor& t);

struct CacheStats {
    int entries = 0;
    int files = 0;
    long long bytes = 0;
    int corrupt = 0;
};
CacheStats cache_verify(const CacheConfig& cfg);
void cache_clear(const CacheConfig& cfg);

}  // namespace pierirank
