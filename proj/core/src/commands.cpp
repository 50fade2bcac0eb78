#include "homcount/commands.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "homcount/bfile.hpp"
#include "homcount/cache.hpp"
#include "homcount/counting.hpp"
#include "homcount/lattice.hpp"
#include "homcount/nat.hpp"
#include "homcount/numtheory.hpp"
#include "homcount/oeis.hpp"
#include "homcount/oracle.hpp"

namespace homcount::cli {

OutputFormat parse_format(const std::string& name) {
  if (name == "plain") return OutputFormat::Plain;
  if (name == "bfile") return OutputFormat::BFile;
  if (name == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown format \"" + name +
                              "\" (expected plain, bfile or json)");
}

namespace {

int usage_error(std::ostream& err, const std::string& message) {
  err << "error: " << message << "\n";
  return kExitUsage;
}

struct Emission {
  std::string kind;
  int rank = 0;
  std::int64_t origin = 0;
  bool normalized = false;
};

void emit_header(std::ostream& out, const Emission& meta, std::size_t count) {
  out << "# homcount " << meta.kind << " r=" << meta.rank << " n="
      << meta.origin << ".."
      << meta.origin + static_cast<std::int64_t>(count) - 1;
  if (meta.normalized) {
    out << " normalized";
  }
  out << "\n";
}

void emit_sequence(std::ostream& out, const Emission& meta,
                   const std::vector<Nat>& values, OutputFormat format,
                   bool header) {
  switch (format) {
    case OutputFormat::Plain:
      if (header) {
        emit_header(out, meta, values.size());
      }
      for (const Nat& v : values) {
        out << v.get_str() << "\n";
      }
      break;
    case OutputFormat::BFile:
      if (header) {
        emit_header(out, meta, values.size());
      }
      for (std::size_t i = 0; i < values.size(); ++i) {
        out << meta.origin + static_cast<std::int64_t>(i) << ' '
            << values[i].get_str() << "\n";
      }
      break;
    case OutputFormat::Json: {
      nlohmann::ordered_json doc;
      doc["r"] = meta.rank;
      doc["kind"] = meta.kind;
      doc["origin"] = meta.origin;
      if (meta.normalized) {
        doc["normalized"] = true;
      }
      nlohmann::ordered_json list = nlohmann::ordered_json::array();
      for (const Nat& v : values) {
        list.push_back(v.get_str());
      }
      doc["values"] = std::move(list);
      out << doc.dump(2) << "\n";
      break;
    }
  }
}

void emit_polynomials(std::ostream& out, const Emission& meta,
                      const std::vector<series::OrbitPolynomial>& rows,
                      OutputFormat format, bool header) {
  switch (format) {
    case OutputFormat::Plain:
      if (header) {
        emit_header(out, meta, rows.size());
      }
      for (std::size_t n = 0; n < rows.size(); ++n) {
        out << n;
        for (std::size_t k = 0; k <= n; ++k) {
          out << ' ' << rows[n].coeff(k).get_str();
        }
        out << "\n";
      }
      break;
    case OutputFormat::BFile:
      throw std::logic_error("emit_polynomials: no b-file form");
    case OutputFormat::Json: {
      nlohmann::ordered_json doc;
      doc["r"] = meta.rank;
      doc["kind"] = meta.kind;
      doc["origin"] = meta.origin;
      nlohmann::ordered_json list = nlohmann::ordered_json::array();
      for (std::size_t n = 0; n < rows.size(); ++n) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k <= n; ++k) {
          row.push_back(rows[n].coeff(k).get_str());
        }
        list.push_back(std::move(row));
      }
      doc["values"] = std::move(list);
      out << doc.dump(2) << "\n";
      break;
    }
  }
}

}  // namespace

int cmd_lambda(const SequenceOptions& options, std::ostream& out,
               std::ostream& err) {
  if (options.rank < 0) {
    return usage_error(err, "lambda: --r must be >= 0");
  }
  if (options.n_max < 1) {
    return usage_error(err, "lambda: --max must be >= 1");
  }
  std::filesystem::path dir = cache::resolve_cache_dir(options.cache_dir);
  lattice::LambdaTable table =
      cache::cached_lambda_table(options.rank, options.n_max, dir, err);
  emit_sequence(out, {"lambda", options.rank, 1}, table.values.values(),
                options.format, options.header);
  return kExitSuccess;
}

int cmd_count(const SequenceOptions& options, std::ostream& out,
              std::ostream& err) {
  if (options.rank < 1) {
    return usage_error(err, "count: --r must be >= 1");
  }
  if (options.orbits && options.egf_normalized) {
    return usage_error(
        err, "count: --orbits cannot be combined with --egf-normalized "
             "(orbit censuses are not factorially normalizable)");
  }
  if (options.orbits && options.format == OutputFormat::BFile) {
    return usage_error(err,
                       "count: --orbits emits polynomials, which have no "
                       "b-file form; use plain or json");
  }
  if (options.orbits) {
    series::EgfCensus census =
        count_tuples_by_orbits(options.rank, options.n_max);
    emit_polynomials(out, {"orbits", options.rank, 0}, census.entries,
                     options.format, options.header);
    return kExitSuccess;
  }
  std::vector<Nat> values = count_tuples(options.rank, options.n_max);
  if (options.egf_normalized) {
    Nat factorial = 1;
    for (std::size_t n = 0; n < values.size(); ++n) {
      if (n > 0) {
        factorial *= static_cast<unsigned long>(n);
      }
      values[n] = nat_divexact(values[n], factorial);
    }
  }
  emit_sequence(out, {"tuples", options.rank, 0, options.egf_normalized},
                values, options.format, options.header);
  return kExitSuccess;
}

int cmd_transitive(const SequenceOptions& options, std::ostream& out,
                   std::ostream& err) {
  if (options.rank < 0) {
    return usage_error(err, "transitive: --r must be >= 0");
  }
  if (options.n_max < 1) {
    return usage_error(err, "transitive: --max must be >= 1");
  }
  std::vector<Nat> values = oeis::compute_prefix(
      {oeis::Derivation::Transitive, options.rank, 1}, options.n_max);
  emit_sequence(out, {"transitive", options.rank, 1}, values, options.format,
                options.header);
  return kExitSuccess;
}

int cmd_hnf(const HnfOptions& options, std::ostream& out, std::ostream& err) {
  if (options.rank < 1) {
    return usage_error(err, "hnf: --r must be >= 1");
  }
  if (options.index < 1) {
    return usage_error(err, "hnf: --n must be >= 1");
  }
  const Nat expected = lattice::lambda_direct(options.rank, options.index);
  if (expected > Nat(1'000'000)) {
    return usage_error(err, "hnf: refusing to enumerate " +
                                expected.get_str() +
                                " matrices (cap 1000000)");
  }
  std::uint64_t count = 0;
  lattice::enumerate_hnf(options.rank, options.index,
                         [&](const lattice::HnfBasis& basis) {
                           ++count;
                           if (options.list) {
                             out << basis.to_string() << "\n";
                           }
                         });
  if (!options.list) {
    out << count << "\n";
  }
  if (expected != Nat(static_cast<unsigned long>(count))) {
    err << "error: enumerated " << count << " matrices but the subgroup "
        << "count gives " << expected.get_str() << "\n";
    return kExitMismatch;
  }
  return kExitSuccess;
}

int cmd_oracle(const OracleOptions& options, std::ostream& out,
               std::ostream& err) {
  if (options.rank < 0) {
    return usage_error(err, "oracle: --r must be >= 0");
  }
  oracle::CensusOptions census_options;
  census_options.node_budget = options.node_budget;
  census_options.threads = options.threads;
  census_options.max_rank = std::max(census_options.max_rank, options.rank);
  census_options.max_degree =
      std::max(census_options.max_degree, options.degree);
  oracle::OrbitCensusResult result;
  try {
    result = oracle::oracle_census(options.rank, options.degree,
                                   census_options);
  } catch (const oracle::BudgetExceeded& e) {
    return usage_error(err, std::string(e.what()) + " (raise --budget)");
  }
  if (options.orbits) {
    std::vector<Nat> histogram(options.degree + 1);
    for (const auto& [orbits, count] : result.by_orbits) {
      histogram[orbits] = count;
    }
    emit_sequence(out, {"orbits", options.rank, 0}, histogram, options.format,
                  false);
  } else {
    emit_sequence(out,
                  {"tuples", options.rank,
                   static_cast<std::int64_t>(options.degree)},
                  {result.total}, options.format, false);
  }
  return kExitSuccess;
}

int cmd_verify(const VerifyOptions& options, std::ostream& out,
               std::ostream& err) {
  if (options.rank < 1) {
    return usage_error(err, "verify: --r must be >= 1");
  }
  if (options.n_max > 9) {
    return usage_error(err, "verify: --max is capped at 9");
  }
  oracle::CensusOptions census_options;
  census_options.node_budget = options.node_budget;
  census_options.threads = options.threads;
  census_options.max_rank = std::max(census_options.max_rank, options.rank);
  census_options.max_degree =
      std::max(census_options.max_degree, options.n_max);

  const std::vector<Nat> totals = count_tuples(options.rank, options.n_max);
  const series::EgfCensus refined =
      count_tuples_by_orbits(options.rank, options.n_max);
  const std::vector<Nat> partitions =
      numtheory::partition_numbers(options.n_max);

  out << "verify r=" << options.rank << " n=0.." << options.n_max
      << ": formula vs oracle\n";
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::size_t mismatched = 0;
  for (std::uint32_t n = 0; n <= options.n_max; ++n) {
    oracle::OrbitCensusResult census;
    try {
      census = oracle::oracle_census(options.rank, n, census_options);
    } catch (const oracle::BudgetExceeded& e) {
      out << "n=" << n << " SKIP: " << e.what() << "\n";
      ++skipped;
      continue;
    }
    ++checked;
    bool total_ok = census.total == totals[n];
    if (options.rank == 1) {
      total_ok = total_ok && census.total == nat_factorial(n);
    }
    if (options.rank == 2) {
      total_ok = total_ok && census.total == partitions[n] * nat_factorial(n);
    }
    bool orbits_ok = true;
    const series::OrbitPolynomial& poly = refined.entries[n];
    for (std::uint32_t k = 0; k <= n; ++k) {
      auto it = census.by_orbits.find(k);
      const Nat oracle_count = it == census.by_orbits.end() ? Nat(0) : it->second;
      if (oracle_count != poly.coeff(k)) {
        orbits_ok = false;
        break;
      }
    }
    if (total_ok && orbits_ok) {
      out << "n=" << n << " total=" << census.total.get_str()
          << " orbits=ok\n";
    } else {
      ++mismatched;
      out << "n=" << n << " MISMATCH formula_total=" << totals[n].get_str()
          << " oracle_total=" << census.total.get_str() << " orbits="
          << (orbits_ok ? "ok" : "bad") << "\n";
    }
  }
  const bool pass = mismatched == 0;
  out << (pass ? "pass" : "fail") << ": " << checked << " cells checked";
  if (mismatched != 0) {
    out << " (" << mismatched << " mismatched)";
  }
  out << ", " << skipped << " skipped\n";
  return pass ? kExitSuccess : kExitMismatch;
}

namespace {

bool derivation_needs_rank(oeis::Derivation derivation) {
  switch (derivation) {
    case oeis::Derivation::Lambda:
    case oeis::Derivation::Tuples:
    case oeis::Derivation::TuplesEgf:
    case oeis::Derivation::Transitive:
      return true;
    case oeis::Derivation::Sigma:
    case oeis::Derivation::Partitions:
      return false;
  }
  return false;
}

std::int64_t natural_origin(oeis::Derivation derivation) {
  switch (derivation) {
    case oeis::Derivation::Sigma:
    case oeis::Derivation::Lambda:
    case oeis::Derivation::Transitive:
      return 1;
    case oeis::Derivation::Tuples:
    case oeis::Derivation::TuplesEgf:
    case oeis::Derivation::Partitions:
      return 0;
  }
  return 0;
}

std::string describe(const oeis::DeriveSpec& spec) {
  std::string text = "derivation " + oeis::derivation_name(spec.derivation);
  if (derivation_needs_rank(spec.derivation)) {
    text += " r=" + std::to_string(spec.rank);
  }
  return text;
}

}  // namespace

int cmd_oeis_check(const OeisCheckOptions& options, std::ostream& out,
                   std::ostream& err) {
  const oeis::OeisEntry* entry = oeis::find_entry(options.id);
  oeis::DeriveSpec spec;
  bool have_spec = entry != nullptr;
  if (entry != nullptr) {
    spec = entry->derive;
  }
  if (!options.derive.empty()) {
    try {
      spec.derivation = oeis::parse_derivation(options.derive);
    } catch (const std::invalid_argument& e) {
      return usage_error(err, e.what());
    }
    if (derivation_needs_rank(spec.derivation) && options.rank < 0) {
      return usage_error(err, "oeis-check: --derive " + options.derive +
                                  " requires --r");
    }
    spec.origin = natural_origin(spec.derivation);
    have_spec = true;
  }
  if (options.rank >= 0) {
    spec.rank = options.rank;
  }
  if (options.origin != OeisCheckOptions::kNoOrigin) {
    spec.origin = options.origin;
  }
  if (!have_spec) {
    return usage_error(err, "unknown sequence id \"" + options.id +
                                "\"; pass --derive (and --r) to describe it");
  }

  std::string text;
  std::string source;
  if (options.fetch) {
    text = oeis::fetch_bfile_text(options.id);  // throws on failure
    source = "fetched";
  } else if (entry != nullptr && entry->bundled != nullptr) {
    text = entry->bundled;
    source = "bundled";
  } else {
    return usage_error(err, "no bundled b-file for \"" + options.id +
                                "\"; pass --fetch to download it");
  }

  bfile::BFile reference;
  try {
    reference = bfile::parse_bfile(text);
  } catch (const bfile::BFileError& e) {
    err << "error: " << options.id << ": " << e.what() << "\n";
    return kExitMismatch;
  }
  oeis::SequenceDiff diff = oeis::compare_bfile(reference, spec, options.limit);
  if (diff.match) {
    out << options.id << ": " << diff.compared << " terms match ("
        << describe(spec) << ", " << source << ")\n";
    return kExitSuccess;
  }
  out << options.id << ": mismatch at n=" << diff.mismatch_index
      << ": file has " << diff.file_value << ", " << describe(spec)
      << " gives " << diff.computed_value << "\n";
  return kExitMismatch;
}

namespace {

std::string witness(const Nat& value) {
  const std::string digits = value.get_str();
  if (digits.size() <= 20) {
    return digits;
  }
  return std::to_string(digits.size()) + " digits";
}

}  // namespace

int cmd_bench(std::ostream& out, std::ostream& err) {
  (void)err;
  auto timed = [&out](const char* label, auto&& work) {
    const auto start = std::chrono::steady_clock::now();
    const Nat result = work();
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    out << "bench " << label << ": " << elapsed.count() << " ms (last value "
        << witness(result) << ")\n";
  };
  timed("lambda r=5 n=10000",
        [] { return lattice::lambda_table(5, 10'000).values(10'000); });
  timed("count r=6 n=1000", [] { return count_tuples(6, 1'000).back(); });
  timed("count-exp r=5 n=500",
        [] { return count_tuples_via_exp_formula(5, 500).back(); });
  timed("oracle r=2 n=6", [] {
    oracle::CensusOptions options;
    return oracle::oracle_census(2, 6, options).total;
  });
  timed("hnf r=4 n=48", [] {
    return Nat(static_cast<unsigned long>(lattice::count_hnf(4, 48)));
  });
  return kExitSuccess;
}

}  // namespace homcount::cli
