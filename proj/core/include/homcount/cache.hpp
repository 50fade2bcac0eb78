#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "homcount/lattice.hpp"

namespace homcount::cache {

/// Where lambda tables are cached. Precedence: explicit flag value, then
/// HOMCOUNT_CACHE_DIR, then $XDG_CACHE_HOME/homcount, then
/// $HOME/.cache/homcount. Empty when nothing resolves (caching disabled).
std::filesystem::path resolve_cache_dir(const std::string& flag_value);

/// Advisory on-disk cache of lambda tables, one JSON file per (rank, N).
/// Every load is revalidated against independent spot recomputations;
/// anything stale, corrupt or version-skewed is ignored with a warning,
/// never trusted.
class LambdaCache {
 public:
  explicit LambdaCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }

  /// Best usable cached table covering n_max (the smallest cached N >= n_max),
  /// or nullopt. Complaints about unusable files go to `warnings`.
  std::optional<lattice::LambdaTable> load(int rank, std::size_t n_max,
                                           std::ostream& warnings) const;

  /// Atomic write (temp file + rename). Throws std::runtime_error when the
  /// directory or file cannot be written.
  void store(const lattice::LambdaTable& table) const;

 private:
  std::filesystem::path dir_;
};

/// lambda_table with a read-through cache: loads when possible, otherwise
/// computes and stores best-effort (store failures only warn). With an
/// empty dir this is exactly lattice::lambda_table. The result is always
/// truncated to exactly n_max values so cache hits and misses are
/// indistinguishable downstream.
lattice::LambdaTable cached_lambda_table(int rank, std::size_t n_max,
                                         const std::filesystem::path& dir,
                                         std::ostream& warnings);

}  // namespace homcount::cache
