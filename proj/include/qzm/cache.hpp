#pragma once

// On-disk cache of family quotient data.
//
// Layout: <dir>/<16 hex digits>.json, one record per family key, the name
// being the FNV-1a hash of the key string; <dir>/index.json maps names to
// human-readable keys. Records that fail to parse or carry a mismatched
// header are moved to <dir>/quarantine/.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qzm/chiral_fock.hpp"

namespace qzm {

inline constexpr const char* kBasisFormat = "qzm-basis/1";

/// "n=3;h=5;unbarred;(2,1,0)"
std::string cache_key(const FockConfig& cfg, const Content& top);
std::string cache_file_name(const std::string& key);

nlohmann::json encode_basis(const FockConfig& cfg, const QuotientBasis& qb);
/// Throws UsageError if the header does not match cfg or the record is malformed.
QuotientBasis decode_basis(const FockConfig& cfg, const nlohmann::json& j);

struct CacheEntry {
  std::string file;
  std::string key;
  std::size_t dimension = 0;
};

struct ValidationResult {
  std::string file;
  std::string key;
  bool ok = false;
  std::string detail;
};

class BasisCache {
 public:
  explicit BasisCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }

  std::optional<QuotientBasis> load(const FockConfig& cfg, const Content& top);
  void store(const FockConfig& cfg, const QuotientBasis& qb);

  std::vector<CacheEntry> list() const;
  /// Re-derives each record with cfg's field and n (records for other
  /// parameters are skipped) and checks a sampled relation instance.
  std::vector<ValidationResult> validate(const FockConfig& cfg);
  std::size_t purge();

  void quarantine(const std::filesystem::path& file, const std::string& reason);
  std::vector<std::string> quarantined() const { return quarantined_; }

 private:
  void write_atomic(const std::filesystem::path& path, const std::string& text) const;
  void update_index(const std::string& file, const std::string& key);

  std::filesystem::path dir_;
  std::vector<std::string> quarantined_;
};

}  // namespace qzm
