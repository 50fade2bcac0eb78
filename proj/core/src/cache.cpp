#include "homcount/cache.hpp"

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <set>
#include <vector>

#include "json.hpp"

#include "homcount/nat.hpp"

namespace homcount::cache {

namespace {

constexpr int kFormatVersion = 1;

std::string env_or_empty(const char* name) {
  const char* value = std::getenv(name);
  return value == nullptr ? std::string() : std::string(value);
}

std::string file_name(int rank, std::size_t n_max) {
  return "lambda-r" + std::to_string(rank) + "-n" + std::to_string(n_max) +
         ".json";
}

/// Extracts N from "lambda-r<rank>-n<N>.json"; 0 when the name does not
/// belong to this rank.
std::size_t parse_n_max(const std::string& name, int rank) {
  const std::string prefix = "lambda-r" + std::to_string(rank) + "-n";
  const std::string suffix = ".json";
  if (name.size() <= prefix.size() + suffix.size() ||
      name.compare(0, prefix.size(), prefix) != 0 ||
      name.compare(name.size() - suffix.size(), suffix.size(), suffix) != 0) {
    return 0;
  }
  std::size_t n = 0;
  for (std::size_t i = prefix.size(); i < name.size() - suffix.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') {
      return 0;
    }
    n = n * 10 + static_cast<std::size_t>(name[i] - '0');
  }
  return n;
}

/// Parses and revalidates one cache file; nullopt (plus a warning) when it
/// cannot be trusted.
std::optional<lattice::LambdaTable> read_table(
    const std::filesystem::path& path, int rank, std::size_t n_max,
    std::ostream& warnings) {
  auto reject = [&](const std::string& why) {
    warnings << "warning: ignoring cache file " << path.string() << ": " << why
             << "\n";
    return std::nullopt;
  };
  std::ifstream in(path);
  if (!in) {
    return reject("unreadable");
  }
  nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    return reject("not valid JSON");
  }
  if (!doc.contains("format_version") ||
      !doc["format_version"].is_number_integer() ||
      doc["format_version"].get<int>() != kFormatVersion) {
    return reject("format version mismatch");
  }
  if (!doc.contains("r") || !doc["r"].is_number_integer() ||
      doc["r"].get<int>() != rank) {
    return reject("rank mismatch");
  }
  if (!doc.contains("n_max") || !doc["n_max"].is_number_unsigned() ||
      doc["n_max"].get<std::size_t>() != n_max) {
    return reject("length mismatch");
  }
  if (!doc.contains("values") || !doc["values"].is_array() ||
      doc["values"].size() != n_max) {
    return reject("values array has the wrong shape");
  }
  std::vector<Nat> values;
  values.reserve(n_max);
  for (const auto& item : doc["values"]) {
    if (!item.is_string()) {
      return reject("values must be decimal strings");
    }
    try {
      values.push_back(nat_from_decimal(item.get<std::string>()));
    } catch (const std::invalid_argument&) {
      return reject("values must be decimal strings");
    }
  }
  lattice::LambdaTable table{rank, numtheory::Seq1(std::move(values))};
  // Spot revalidation before trusting anything: lambda(1) = 1, then the
  // divisor identity lambda_r(n) = sum_{d|n} d * lambda_{r-1}(d) at a few
  // scattered n, with the lower-rank values recomputed independently.
  if (table.values(1) != 1) {
    return reject("stored values fail revalidation at n=1");
  }
  std::set<std::size_t> probes;
  for (std::size_t candidate : {std::size_t{2}, std::size_t{12},
                                std::size_t{30}, n_max}) {
    probes.insert(std::min(candidate, n_max));
  }
  for (std::size_t n : probes) {
    Nat expected = 0;
    if (rank == 0) {
      expected = n == 1 ? 1 : 0;
    } else {
      for (std::uint64_t d : numtheory::divisors(n)) {
        expected += Nat(static_cast<unsigned long>(d)) *
                    lattice::lambda_direct(rank - 1, d);
      }
    }
    if (table.values(n) != expected) {
      return reject("stored values fail revalidation at n=" +
                    std::to_string(n));
    }
  }
  return table;
}

}  // namespace

std::filesystem::path resolve_cache_dir(const std::string& flag_value) {
  if (!flag_value.empty()) {
    return flag_value;
  }
  if (std::string env = env_or_empty("HOMCOUNT_CACHE_DIR"); !env.empty()) {
    return env;
  }
  if (std::string xdg = env_or_empty("XDG_CACHE_HOME"); !xdg.empty()) {
    return std::filesystem::path(xdg) / "homcount";
  }
  if (std::string home = env_or_empty("HOME"); !home.empty()) {
    return std::filesystem::path(home) / ".cache" / "homcount";
  }
  return {};
}

std::optional<lattice::LambdaTable> LambdaCache::load(
    int rank, std::size_t n_max, std::ostream& warnings) const {
  std::error_code ec;
  if (dir_.empty() || !std::filesystem::is_directory(dir_, ec)) {
    return std::nullopt;
  }
  // Smallest cached table that covers the request.
  std::set<std::size_t> candidates;
  for (const auto& entry : std::filesystem::directory_iterator(dir_, ec)) {
    if (!entry.is_regular_file(ec)) {
      continue;
    }
    std::size_t n = parse_n_max(entry.path().filename().string(), rank);
    if (n >= n_max) {
      candidates.insert(n);
    }
  }
  for (std::size_t n : candidates) {
    if (auto table = read_table(dir_ / file_name(rank, n), rank, n, warnings)) {
      return table;
    }
  }
  return std::nullopt;
}

void LambdaCache::store(const lattice::LambdaTable& table) const {
  if (dir_.empty()) {
    throw std::runtime_error("lambda cache: no cache directory");
  }
  std::filesystem::create_directories(dir_);
  nlohmann::ordered_json doc;
  doc["format_version"] = kFormatVersion;
  doc["r"] = table.rank;
  doc["n_max"] = table.values.size();
  nlohmann::ordered_json values = nlohmann::ordered_json::array();
  for (const Nat& v : table.values.values()) {
    values.push_back(v.get_str());
  }
  doc["values"] = std::move(values);

  const std::filesystem::path final_path =
      dir_ / file_name(table.rank, table.values.size());
  const std::filesystem::path temp_path =
      final_path.string() + ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(temp_path);
    if (!out) {
      throw std::runtime_error("lambda cache: cannot write " +
                               temp_path.string());
    }
    out << doc.dump(2) << '\n';
    if (!out.flush()) {
      throw std::runtime_error("lambda cache: short write to " +
                               temp_path.string());
    }
  }
  std::filesystem::rename(temp_path, final_path);
}

lattice::LambdaTable cached_lambda_table(int rank, std::size_t n_max,
                                         const std::filesystem::path& dir,
                                         std::ostream& warnings) {
  if (dir.empty()) {
    return lattice::lambda_table(rank, n_max);
  }
  LambdaCache cache(dir);
  if (auto table = cache.load(rank, n_max, warnings)) {
    if (table->values.size() == n_max) {
      return std::move(*table);
    }
    std::vector<Nat> truncated(table->values.values().begin(),
                               table->values.values().begin() +
                                   static_cast<std::ptrdiff_t>(n_max));
    return {rank, numtheory::Seq1(std::move(truncated))};
  }
  lattice::LambdaTable table = lattice::lambda_table(rank, n_max);
  try {
    cache.store(table);
  } catch (const std::exception& e) {
    warnings << "warning: " << e.what() << " (continuing without cache)\n";
  }
  return table;
}

}  // namespace homcount::cache
