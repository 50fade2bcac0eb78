#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "homcount/oeis.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "httplib.h"

#include "homcount/counting.hpp"
#include "homcount/lattice.hpp"
#include "homcount/numtheory.hpp"

#include "oeis_bundled.inc"

namespace homcount::oeis {

Derivation parse_derivation(const std::string& name) {
  if (name == "sigma") return Derivation::Sigma;
  if (name == "lambda") return Derivation::Lambda;
  if (name == "tuples") return Derivation::Tuples;
  if (name == "tuples-egf") return Derivation::TuplesEgf;
  if (name == "transitive") return Derivation::Transitive;
  if (name == "partitions") return Derivation::Partitions;
  throw std::invalid_argument("unknown derivation \"" + name +
                              "\" (expected sigma, lambda, tuples, "
                              "tuples-egf, transitive or partitions)");
}

std::string derivation_name(Derivation derivation) {
  switch (derivation) {
    case Derivation::Sigma: return "sigma";
    case Derivation::Lambda: return "lambda";
    case Derivation::Tuples: return "tuples";
    case Derivation::TuplesEgf: return "tuples-egf";
    case Derivation::Transitive: return "transitive";
    case Derivation::Partitions: return "partitions";
  }
  throw std::logic_error("derivation_name: bad enum value");
}

const std::vector<OeisEntry>& registry() {
  static const std::vector<OeisEntry> entries = {
      {"A000203",
       {Derivation::Sigma, 0, 1},
       "sum of divisors of n",
       kBundledB000203},
      {"A001001",
       {Derivation::Lambda, 3, 1},
       "index-n subgroups of Z^3",
       kBundledB001001},
      {"A061256",
       {Derivation::TuplesEgf, 3, 0},
       "commuting permutation triples, factorially normalized",
       kBundledB061256},
      {"A079860",
       {Derivation::Tuples, 3, 0},
       "commuting permutation triples",
       kBundledB079860},
  };
  return entries;
}

const OeisEntry* find_entry(const std::string& id) {
  for (const OeisEntry& entry : registry()) {
    if (entry.id == id) {
      return &entry;
    }
  }
  return nullptr;
}

std::vector<Nat> compute_prefix(const DeriveSpec& spec, std::size_t count) {
  std::vector<Nat> values;
  if (count == 0) {
    return values;
  }
  values.reserve(count);
  const std::int64_t origin = spec.origin;
  const std::int64_t last = origin + static_cast<std::int64_t>(count) - 1;
  auto require_origin = [&](std::int64_t least) {
    if (origin < least) {
      throw std::invalid_argument(
          "derivation " + derivation_name(spec.derivation) +
          " starts at n = " + std::to_string(least) + ", not " +
          std::to_string(origin));
    }
  };
  switch (spec.derivation) {
    case Derivation::Sigma: {
      require_origin(1);
      for (std::int64_t n = origin; n <= last; ++n) {
        values.push_back(
            numtheory::sigma(static_cast<std::uint64_t>(n)));
      }
      break;
    }
    case Derivation::Lambda: {
      require_origin(1);
      lattice::LambdaTable table =
          lattice::lambda_table(spec.rank, static_cast<std::size_t>(last));
      for (std::int64_t n = origin; n <= last; ++n) {
        values.push_back(table.values(static_cast<std::size_t>(n)));
      }
      break;
    }
    case Derivation::Tuples: {
      require_origin(0);
      std::vector<Nat> totals =
          count_tuples(spec.rank, static_cast<std::size_t>(last));
      for (std::int64_t n = origin; n <= last; ++n) {
        values.push_back(totals[static_cast<std::size_t>(n)]);
      }
      break;
    }
    case Derivation::TuplesEgf: {
      require_origin(0);
      series::OgfSeries series =
          count_tuples_egf(spec.rank, static_cast<std::size_t>(last));
      for (std::int64_t n = origin; n <= last; ++n) {
        values.push_back(series.coeffs[static_cast<std::size_t>(n)]);
      }
      break;
    }
    case Derivation::Transitive: {
      require_origin(1);
      lattice::LambdaTable table =
          lattice::lambda_table(spec.rank, static_cast<std::size_t>(last));
      Nat factorial = 1;  // (n-1)!, maintained incrementally
      for (std::int64_t n = 1; n <= last; ++n) {
        if (n >= origin) {
          values.push_back(factorial * table.values(static_cast<std::size_t>(n)));
        }
        factorial *= static_cast<unsigned long>(n);
      }
      break;
    }
    case Derivation::Partitions: {
      require_origin(0);
      std::vector<Nat> partitions =
          numtheory::partition_numbers(static_cast<std::size_t>(last));
      for (std::int64_t n = origin; n <= last; ++n) {
        values.push_back(partitions[static_cast<std::size_t>(n)]);
      }
      break;
    }
  }
  return values;
}

SequenceDiff compare_bfile(const bfile::BFile& reference,
                           const DeriveSpec& spec, std::size_t limit) {
  SequenceDiff diff;
  std::size_t take = reference.entries.size();
  if (limit != 0) {
    take = std::min(take, limit);
  }
  if (take == 0) {
    return diff;
  }
  const std::int64_t max_index = reference.entries[take - 1].first;
  std::vector<Nat> computed;
  if (max_index >= spec.origin) {
    computed = compute_prefix(
        spec, static_cast<std::size_t>(max_index - spec.origin) + 1);
  }
  for (std::size_t i = 0; i < take; ++i) {
    const auto& [index, file_value] = reference.entries[i];
    if (index < spec.origin) {
      diff.match = false;
      diff.mismatch_index = index;
      diff.file_value = file_value.get_str();
      diff.computed_value = "(before origin " + std::to_string(spec.origin) + ")";
      return diff;
    }
    const Nat& ours = computed[static_cast<std::size_t>(index - spec.origin)];
    ++diff.compared;
    if (ours != file_value) {
      diff.match = false;
      diff.mismatch_index = index;
      diff.file_value = file_value.get_str();
      diff.computed_value = ours.get_str();
      return diff;
    }
  }
  return diff;
}

std::string fetch_bfile_text(const std::string& id) {
  if (id.size() < 2 || id.front() != 'A' ||
      !std::all_of(id.begin() + 1, id.end(),
                   [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw std::runtime_error("malformed sequence id \"" + id + "\"");
  }
  httplib::Client client("https://oeis.org");
  client.set_follow_location(true);
  client.set_connection_timeout(10, 0);
  client.set_read_timeout(30, 0);
  const std::string path = "/" + id + "/b" + id.substr(1) + ".txt";
  httplib::Result res = client.Get(path);
  if (!res) {
    throw std::runtime_error("fetching " + path + " failed: " +
                             httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw std::runtime_error("fetching " + path + " failed: HTTP " +
                             std::to_string(res->status));
  }
  return res->body;
}

}  // namespace homcount::oeis
