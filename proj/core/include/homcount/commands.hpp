#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace homcount::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

enum class OutputFormat { Plain, BFile, Json };

/// Accepts "plain", "bfile", "json"; throws std::invalid_argument otherwise.
OutputFormat parse_format(const std::string& name);

/// Shared options of the sequence-emitting commands (lambda, count,
/// transitive). Fields the given command does not use are ignored by it.
struct SequenceOptions {
  int rank = 2;
  std::size_t n_max = 10;
  OutputFormat format = OutputFormat::Plain;
  /// Prepend one deterministic '#' comment line (plain/bfile only).
  bool header = false;
  bool orbits = false;          // count: emit P_n(y) coefficient rows
  bool egf_normalized = false;  // count: divide T_r(n) by n!
  std::string cache_dir;        // lambda: overrides env/default cache dir
};

/// lambda_rank(1..n_max). rank >= 0.
int cmd_lambda(const SequenceOptions& options, std::ostream& out,
               std::ostream& err);
/// T_rank(0..n_max), optionally orbit-refined or factorially normalized.
/// rank >= 1.
int cmd_count(const SequenceOptions& options, std::ostream& out,
              std::ostream& err);
/// (n-1)! * lambda_rank(n) for n = 1..n_max. rank >= 0.
int cmd_transitive(const SequenceOptions& options, std::ostream& out,
                   std::ostream& err);

struct HnfOptions {
  int rank = 2;
  std::uint64_t index = 1;
  bool list = false;  // print the matrices instead of just their number
};

/// Enumerates the Hermite normal forms of the given rank and index.
int cmd_hnf(const HnfOptions& options, std::ostream& out, std::ostream& err);

struct OracleOptions {
  int rank = 2;
  std::uint32_t degree = 3;
  bool orbits = false;
  OutputFormat format = OutputFormat::Plain;
  std::uint64_t node_budget = 120'000;
  unsigned threads = 1;
};

/// Brute-force census of commuting rank-tuples in S_degree.
int cmd_oracle(const OracleOptions& options, std::ostream& out,
               std::ostream& err);

struct VerifyOptions {
  int rank = 2;
  std::uint32_t n_max = 4;
  std::uint64_t node_budget = 120'000;
  unsigned threads = 1;
};

/// Formula-vs-oracle suite for one rank, n = 0..n_max. Cells beyond the
/// oracle budget are reported as skipped, not failed.
int cmd_verify(const VerifyOptions& options, std::ostream& out,
               std::ostream& err);

struct OeisCheckOptions {
  std::string id;
  bool fetch = false;
  std::size_t limit = 0;  // 0 = every term the b-file has
  /// Overrides for checking an id against a different derivation; empty /
  /// negative / kNoOrigin mean "use the catalogued defaults".
  std::string derive;
  int rank = -1;
  static constexpr std::int64_t kNoOrigin = INT64_MIN;
  std::int64_t origin = kNoOrigin;
};

/// Compares a b-file (bundled or fetched) against a derivation.
int cmd_oeis_check(const OeisCheckOptions& options, std::ostream& out,
                   std::ostream& err);

/// Wall-clock timings of the representative heavy paths.
int cmd_bench(std::ostream& out, std::ostream& err);

}  // namespace homcount::cli
