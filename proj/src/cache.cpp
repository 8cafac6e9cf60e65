#include "trisphom/cache.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <system_error>

namespace trisphom {

ArtifactCache::ArtifactCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) {
        std::filesystem::create_directories(dir_);
    }
}

std::string ArtifactCache::key_of(std::string_view description) {
    // FNV-1a, 64-bit.
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char c : description) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string key(16, '0');
    for (int i = 15; i >= 0; --i) {
        key[static_cast<std::size_t>(i)] = digits[hash & 0xf];
        hash >>= 4;
    }
    return key;
}

std::optional<ordered_json> ArtifactCache::load(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    const std::filesystem::path file = dir_ / (key + ".json");
    std::ifstream in(file);
    if (!in) return std::nullopt;
    try {
        return ordered_json::parse(in);
    } catch (const ordered_json::parse_error&) {
        return std::nullopt;  // treat a corrupt entry as a miss
    }
}

void ArtifactCache::store(const std::string& key, const ordered_json& doc) const {
    if (!enabled()) return;
    const std::filesystem::path file = dir_ / (key + ".json");
    const std::filesystem::path tmp = dir_ / (key + ".tmp");
    {
        std::ofstream out(tmp);
        out << dump_artifact(doc);
        if (!out) return;  // cache writes are best-effort
    }
    std::error_code ec;
    std::filesystem::rename(tmp, file, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace trisphom
