#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "homcount/commands.hpp"
#include "homcount/oracle.hpp"

namespace cli = homcount::cli;

int main(int argc, char** argv) {
  CLI::App app{
      "homcount: exact counts of commuting permutation tuples, subgroup "
      "lattices of Z^r, and the actions connecting them"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "homcount 0.1.0");

  const CLI::Validator format_values =
      CLI::IsMember({"plain", "bfile", "json"});

  int exit_code = cli::kExitSuccess;

  cli::SequenceOptions lambda_options;
  std::string lambda_format = "plain";
  auto* lambda = app.add_subcommand(
      "lambda", "Count the index-n subgroups of Z^r for n = 1..max");
  lambda->add_option("--r", lambda_options.rank, "Rank r of Z^r (>= 0)")
      ->capture_default_str();
  lambda->add_option("--max", lambda_options.n_max, "Largest index n")
      ->capture_default_str();
  lambda->add_option("--format", lambda_format, "Output format")
      ->check(format_values)
      ->capture_default_str();
  lambda->add_flag("--header", lambda_options.header,
                   "Prepend a '#' comment line (plain/bfile)");
  lambda->add_option("--cache-dir", lambda_options.cache_dir,
                     "Cache directory (default: $HOMCOUNT_CACHE_DIR, then "
                     "the per-user cache)");
  lambda->callback([&] {
    lambda_options.format = cli::parse_format(lambda_format);
    exit_code = cli::cmd_lambda(lambda_options, std::cout, std::cerr);
  });

  cli::SequenceOptions count_options;
  std::string count_format = "plain";
  auto* count = app.add_subcommand(
      "count",
      "Count the commuting r-tuples of permutations of n points, n = 0..max");
  count->add_option("--r", count_options.rank, "Tuple length r (>= 1)")
      ->capture_default_str();
  count->add_option("--max", count_options.n_max, "Largest degree n")
      ->capture_default_str();
  count->add_flag("--orbits", count_options.orbits,
                  "Refine each count by the number of orbits (emits one "
                  "coefficient row per n)");
  count->add_flag("--egf-normalized", count_options.egf_normalized,
                  "Divide each count by n! (exactness asserted)");
  count->add_option("--format", count_format, "Output format")
      ->check(format_values)
      ->capture_default_str();
  count->add_flag("--header", count_options.header,
                  "Prepend a '#' comment line (plain/bfile)");
  count->callback([&] {
    count_options.format = cli::parse_format(count_format);
    exit_code = cli::cmd_count(count_options, std::cout, std::cerr);
  });

  cli::SequenceOptions transitive_options;
  std::string transitive_format = "plain";
  auto* transitive = app.add_subcommand(
      "transitive",
      "Count the transitive actions of Z^r on n points, n = 1..max");
  transitive
      ->add_option("--r", transitive_options.rank, "Rank r of Z^r (>= 0)")
      ->capture_default_str();
  transitive->add_option("--max", transitive_options.n_max, "Largest degree n")
      ->capture_default_str();
  transitive->add_option("--format", transitive_format, "Output format")
      ->check(format_values)
      ->capture_default_str();
  transitive->add_flag("--header", transitive_options.header,
                       "Prepend a '#' comment line (plain/bfile)");
  transitive->callback([&] {
    transitive_options.format = cli::parse_format(transitive_format);
    exit_code = cli::cmd_transitive(transitive_options, std::cout, std::cerr);
  });

  cli::HnfOptions hnf_options;
  auto* hnf = app.add_subcommand(
      "hnf",
      "Enumerate the Hermite-normal-form bases of the index-n subgroups "
      "of Z^r");
  hnf->add_option("--r", hnf_options.rank, "Rank r of Z^r (>= 1)")
      ->capture_default_str();
  hnf->add_option("--n", hnf_options.index, "Subgroup index n (>= 1)")
      ->capture_default_str();
  hnf->add_flag("--list", hnf_options.list,
                "Print every basis matrix instead of only their number");
  hnf->callback(
      [&] { exit_code = cli::cmd_hnf(hnf_options, std::cout, std::cerr); });

  cli::OracleOptions oracle_options;
  std::string oracle_format = "plain";
  auto* oracle = app.add_subcommand(
      "oracle",
      "Brute-force census of commuting r-tuples in the symmetric group on "
      "n points");
  oracle->add_option("--r", oracle_options.rank, "Tuple length r (>= 0)")
      ->capture_default_str();
  oracle->add_option("--n", oracle_options.degree, "Number of points n")
      ->capture_default_str();
  oracle->add_flag("--orbits", oracle_options.orbits,
                   "Print the orbit-count histogram instead of the total");
  oracle->add_option("--format", oracle_format, "Output format")
      ->check(format_values)
      ->capture_default_str();
  oracle
      ->add_option("--budget", oracle_options.node_budget,
                   "Refuse searches estimated to exceed this many nodes")
      ->capture_default_str();
  oracle->add_option("--threads", oracle_options.threads, "Worker threads")
      ->capture_default_str();
  oracle->callback([&] {
    oracle_options.format = cli::parse_format(oracle_format);
    exit_code = cli::cmd_oracle(oracle_options, std::cout, std::cerr);
  });

  cli::VerifyOptions verify_options;
  auto* verify = app.add_subcommand(
      "verify",
      "Check the formula counts against the brute-force oracle for one rank");
  verify->add_option("--r", verify_options.rank, "Tuple length r (>= 1)")
      ->capture_default_str();
  verify->add_option("--max", verify_options.n_max, "Largest degree n (<= 9)")
      ->capture_default_str();
  verify
      ->add_option("--budget", verify_options.node_budget,
                   "Skip cells estimated to exceed this many search nodes")
      ->capture_default_str();
  verify->add_option("--threads", verify_options.threads, "Worker threads")
      ->capture_default_str();
  verify->callback([&] {
    exit_code = cli::cmd_verify(verify_options, std::cout, std::cerr);
  });

  cli::OeisCheckOptions oeis_options;
  auto* oeis_check = app.add_subcommand(
      "oeis-check",
      "Compare a derived sequence against an OEIS b-file (bundled, or "
      "fetched with --fetch)");
  oeis_check->add_option("id", oeis_options.id, "Sequence id, e.g. A000203")
      ->required();
  oeis_check->add_flag("--fetch", oeis_options.fetch,
                       "Download the b-file from oeis.org instead of using "
                       "the bundled prefix");
  oeis_check->add_option("--max", oeis_options.limit,
                         "Compare at most this many terms (0 = all)");
  oeis_check->add_option(
      "--derive", oeis_options.derive,
      "Derivation to check against: sigma, lambda, tuples, tuples-egf, "
      "transitive or partitions (default: the catalogued one)");
  oeis_check->add_option("--r", oeis_options.rank,
                         "Rank for the lambda/tuples/tuples-egf/transitive "
                         "derivations");
  oeis_check->add_option("--origin", oeis_options.origin,
                         "Index of the first derived term (default: the "
                         "derivation's natural origin)");
  oeis_check->callback([&] {
    exit_code = cli::cmd_oeis_check(oeis_options, std::cout, std::cerr);
  });

  auto* bench = app.add_subcommand(
      "bench", "Time the representative heavy computations");
  bench->callback([&] { exit_code = cli::cmd_bench(std::cout, std::cerr); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUsage;
  } catch (const homcount::oracle::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitMismatch;
  }
  return exit_code;
}
