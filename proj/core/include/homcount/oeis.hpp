#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homcount/bfile.hpp"
#include "homcount/nat.hpp"

namespace homcount::oeis {

/// The sequence families this tool can derive from first principles.
enum class Derivation {
  Sigma,       // sum of divisors, n >= 1
  Lambda,      // lambda_rank(n), n >= 1
  Tuples,      // T_rank(n), n >= 0
  TuplesEgf,   // T_rank(n)/n!, n >= 0
  Transitive,  // (n-1)! * lambda_rank(n), n >= 1
  Partitions,  // p(n), n >= 0
};

/// Throws std::invalid_argument for names outside
/// {sigma, lambda, tuples, tuples-egf, transitive, partitions}.
Derivation parse_derivation(const std::string& name);
std::string derivation_name(Derivation derivation);

struct DeriveSpec {
  Derivation derivation = Derivation::Sigma;
  int rank = 0;            // used by lambda/tuples/tuples-egf/transitive
  std::int64_t origin = 1; // index of the first term
};

/// A catalogued sequence: how to derive it, plus an optional bundled
/// b-file prefix for offline comparison.
struct OeisEntry {
  std::string id;  // e.g. "A000203"
  DeriveSpec derive;
  std::string note;
  const char* bundled = nullptr;  // embedded b-file text, if shipped
};

const std::vector<OeisEntry>& registry();
/// nullptr when the id is not catalogued.
const OeisEntry* find_entry(const std::string& id);

/// First `count` values of the derived sequence, starting at spec.origin.
std::vector<Nat> compute_prefix(const DeriveSpec& spec, std::size_t count);

/// Outcome of checking a reference b-file against a derivation.
struct SequenceDiff {
  std::size_t compared = 0;
  bool match = true;
  /// Valid only when !match:
  std::int64_t mismatch_index = 0;
  std::string file_value;
  std::string computed_value;
};

/// Compares the first min(limit, size) entries of `reference` against the
/// derivation; limit = 0 means the whole file. Indices below spec.origin
/// count as mismatches (nothing to derive there).
SequenceDiff compare_bfile(const bfile::BFile& reference,
                           const DeriveSpec& spec, std::size_t limit);

/// Downloads the b-file for `id` from oeis.org over HTTPS. Network use is
/// the caller's explicit choice; throws std::runtime_error on any failure.
std::string fetch_bfile_text(const std::string& id);

}  // namespace homcount::oeis
