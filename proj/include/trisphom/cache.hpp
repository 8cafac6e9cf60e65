#ifndef TRISPHOM_CACHE_HPP
#define TRISPHOM_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "trisphom/json_io.hpp"

namespace trisphom {

/// Disk cache for heavy artifacts, keyed by a content hash of their
/// construction parameters. Disabled when constructed with an empty path.
class ArtifactCache {
public:
    ArtifactCache() = default;
    explicit ArtifactCache(std::filesystem::path dir);

    bool enabled() const { return !dir_.empty(); }

    /// FNV-1a hash of the parameter string, as 16 hex digits.
    static std::string key_of(std::string_view description);

    std::optional<ordered_json> load(const std::string& key) const;

    /// Atomic write: temp file then rename.
    void store(const std::string& key, const ordered_json& doc) const;

private:
    std::filesystem::path dir_;
};

}  // namespace trisphom

#endif
