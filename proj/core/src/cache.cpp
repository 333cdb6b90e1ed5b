#include "pierirank/cache.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pierirank/pieri_tensor.hpp"

namespace pierirank {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

uint64_t fnv1a_file(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    uint64_t h = 1469598103934665603ull;
    char buf[4096];
    while (is.read(buf, sizeof(buf)) || is.gcount() > 0) {
        for (std::streamsize i = 0; i < is.gcount(); ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 1099511628211ull;
        }
        if (!is) break;
    }
    return h;
}

fs::path manifest_path(const CacheConfig& cfg) { return fs::path(cfg.dir) / "manifest.json"; }

json load_manifest(const CacheConfig& cfg) {
    std::ifstream is(manifest_path(cfg));
    if (!is) return json{{"version", kBasisVersion}, {"entries", json::object()}};
    try {
        json j = json::parse(is);
        if (j.value("version", -1) != kBasisVersion)
            return json{{"version", kBasisVersion}, {"entries", json::object()}};
        return j;
    } catch (const std::exception&) {
        std::cerr << "pieri-rank: cache manifest unreadable, ignoring\n";
        return json{{"version", kBasisVersion}, {"entries", json::object()}};
    }
}

void atomic_write(const fs::path& path, const std::string& contents) {
    fs::path tmp = path;
    tmp += ".tmp" + std::to_string(::getpid());
    {
        std::ofstream os(tmp, std::ios::binary);
        os << contents;
        if (!os) throw std::runtime_error("cache write failed: " + tmp.string());
    }
    fs::rename(tmp, path);
}

void store_manifest(const CacheConfig& cfg, const json& j) {
    atomic_write(manifest_path(cfg), j.dump(1));
}

}  // namespace

CacheConfig default_cache(const std::string& flag_dir) {
    if (!flag_dir.empty()) return {flag_dir};
    if (const char* env = std::getenv("PIERI_RANK_CACHE"); env && *env) return {env};
    if (const char* home = std::getenv("HOME"); home && *home)
        return {(fs::path(home) / ".cache" / "pieri-rank").string()};
    return {(fs::temp_directory_path() / "pieri-rank-cache").string()};
}

std::string cache_key(const PieriTensor& t) {
    std::ostringstream os;
    os << "l" << t.lambda.to_string() << "_m" << t.mu.to_string() << "_u" << t.u.to_string()
       << "_n" << t.n << "_v" << kBasisVersion;
    std::string s = os.str();
    for (auto& c : s)
        if (c == '(' || c == ')' || c == ',' || c == ':') c = '-';
    return s;
}

bool cache_try_load(const CacheConfig& cfg, PieriTensor& t) {
    json manifest = load_manifest(cfg);
    std::string key = cache_key(t);
    if (!manifest["entries"].contains(key)) return false;
    const json& entry = manifest["entries"][key];
    try {
        fs::path f1p = fs::path(cfg.dir) / entry.at("f1").at("file").get<std::string>();
        fs::path f2p = fs::path(cfg.dir) / entry.at("f2").at("file").get<std::string>();
        if (fnv1a_file(f1p) != std::stoull(entry.at("f1").at("checksum").get<std::string>()) ||
            fnv1a_file(f2p) != std::stoull(entry.at("f2").at("checksum").get<std::string>()))
            throw std::runtime_error("checksum mismatch");
        t.f1 = SparseIntMatrix::load(f1p.string());
        t.f2 = SparseIntMatrix::load(f2p.string());
        if (t.f1.rows() != t.k * t.dim_u || t.f1.cols() != t.l ||
            t.f2.rows() != t.l * t.dim_u || t.f2.cols() != t.k)
            throw std::runtime_error("cached shape mismatch");
        return true;
    } catch (const std::exception& ex) {
        std::cerr << "pieri-rank: cache entry for " << key << " unusable (" << ex.what()
                  << "), rebuilding\n";
        return false;
    }
}

void cache_store(const CacheConfig& cfg, const PieriTensor& t) {
    fs::create_directories(cfg.dir);
    std::string key = cache_key(t);
    std::string f1name = key + ".f1.mtx";
    std::string f2name = key + ".f2.mtx";

    std::ostringstream o1, o2;
    t.f1.write_matrix_market(o1);
    t.f2.write_matrix_market(o2);
    atomic_write(fs::path(cfg.dir) / f1name, o1.str());
    atomic_write(fs::path(cfg.dir) / f2name, o2.str());

    json manifest = load_manifest(cfg);
    json entry;
    entry["f1"] = {{"file", f1name},
                   {"checksum", std::to_string(fnv1a_file(fs::path(cfg.dir) / f1name))},
                   {"bytes", static_cast<long long>(fs::file_size(fs::path(cfg.dir) / f1name))}};
    entry["f2"] = {{"file", f2name},
                   {"checksum", std::to_string(fnv1a_file(fs::path(cfg.dir) / f2name))},
                   {"bytes", static_cast<long long>(fs::file_size(fs::path(cfg.dir) / f2name))}};
    manifest["entries"][key] = entry;
    store_manifest(cfg, manifest);
}

CacheStats cache_verify(const CacheConfig& cfg) {
    CacheStats stats;
    json manifest = load_manifest(cfg);
    for (const auto& [key, entry] : manifest["entries"].items()) {
        ++stats.entries;
        for (const char* part : {"f1", "f2"}) {
            ++stats.files;
            fs::path p = fs::path(cfg.dir) / entry.at(part).at("file").get<std::string>();
            if (!fs::exists(p) ||
                fnv1a_file(p) != std::stoull(entry.at(part).at("checksum").get<std::string>())) {
                ++stats.corrupt;
            } else {
                stats.bytes += static_cast<long long>(fs::file_size(p));
            }
        }
    }
    return stats;
}

void cache_clear(const CacheConfig& cfg) {
    if (fs::exists(cfg.dir)) fs::remove_all(cfg.dir);
}

}  // namespace pierirank
