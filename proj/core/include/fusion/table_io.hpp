#pragma once

// Serialized forms of fusion tables and the on-disk table cache.
//
// JSON files carry a cache key: a hash of (algebra, level, code version).
// A file whose key does not match the running code is treated as stale and
// recomputed.  The key says nothing about the numbers inside; corrupted
// constants are caught by the property checks, not by the cache.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "fusion/fusion_ring.hpp"

namespace fusion {

std::string_view code_version();
std::string cache_key(Algebra algebra, int level);

/// "a·ω1+b·ω2".
std::string weight_label(Weight w);

std::string table_to_json(const FusionTable& table);
std::string table_to_csv(const FusionTable& table);
std::string table_to_pretty(const FusionTable& table);

struct ParsedTable {
  std::string key;
  FusionTable table;
};

/// Throws std::runtime_error on malformed input.
ParsedTable table_from_json(std::string_view text);

class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// FUSIONRING_CACHE_DIR, if set and nonempty.
  static std::optional<std::filesystem::path> default_dir();

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(Algebra algebra, int level) const;

  /// nullopt if the file is missing or its key is stale.
  std::optional<FusionTable> load(Algebra algebra, int level) const;
  /// Writes to a temporary file and renames it into place.
  void store(const FusionTable& table) const;
  FusionTable load_or_compute(Algebra algebra, int level) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace fusion
