#include <algorithm>
#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "semigap/analysis.hpp"
#include "semigap/core.hpp"
#include "semigap/isolated.hpp"
#include "semigap/oracle.hpp"
#include "semigap/sweep.hpp"

namespace {

using nlohmann::json;

std::string join(const std::vector<std::int64_t>& xs, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_analyze(std::int64_t a, std::int64_t b, const std::string& format) {
  const semigap::AnalysisDocument doc = semigap::analyze_pair(a, b);
  if (format == "json") {
    std::cout << semigap::render_json(doc);
  } else if (format == "csv") {
    std::cout << semigap::render_csv(doc);
  } else {
    std::cout << semigap::render_table(doc);
  }
  return 0;
}

int run_isolated(std::int64_t a, std::int64_t b, const std::string& format) {
  const semigap::PairSemigroup s(a, b);
  const semigap::IsolatedGapProfile profile = semigap::isolated_gaps(s);
  if (format == "json") {
    json j;
    j["schema"] = 1;
    j["generators"] = {a, b};
    j["isolated_count"] = profile.count;
    j["min_isolated_gap"] = profile.h;
    j["isolated_gaps"] = profile.gaps;
    print_json(j);
  } else {
    std::cout << join(profile.gaps) << "\n";
  }
  return 0;
}

int run_matrix(std::int64_t a, std::int64_t b, const std::string& format) {
  const semigap::PairSemigroup s(a, b);
  const semigap::GapMatrix m = semigap::gap_matrix(s);
  if (format == "json") {
    json j;
    j["schema"] = 1;
    j["generators"] = {a, b};
    j["gap_matrix"] = {
        {"rows", m.rows}, {"cols", m.cols}, {"entries", m.entries}};
    print_json(j);
  } else {
    std::size_t width = 1;
    for (const auto& row : m.entries) {
      for (std::int64_t x : row) {
        width = std::max(width, std::to_string(x).size());
      }
    }
    for (const auto& row : m.entries) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        const std::string cell = std::to_string(row[j]);
        std::cout << (j ? " " : "") << std::string(width - cell.size(), ' ')
                  << cell;
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int run_partition(std::int64_t a, std::int64_t b, std::int64_t modulus,
                  bool mod_given, const std::string& format) {
  const semigap::PairSemigroup s(a, b);
  if (!mod_given) modulus = a;
  const semigap::ResiduePartition part =
      semigap::residue_partition(s, modulus);
  if (format == "json") {
    json blocks = json::array();
    for (const auto& [residue, gaps] : part.blocks) {
      blocks.push_back({{"residue", residue}, {"gaps", gaps}});
    }
    json j;
    j["schema"] = 1;
    j["generators"] = {a, b};
    j["modulus"] = part.modulus;
    j["blocks"] = std::move(blocks);
    print_json(j);
  } else {
    for (const auto& [residue, gaps] : part.blocks) {
      std::cout << "i=" << residue << "  " << join(gaps) << "\n";
    }
  }
  return 0;
}

int run_perfect(const std::vector<std::int64_t>& generators,
                const std::string& format) {
  const semigap::GenericSemigroup s(generators);
  const bool perfect = semigap::is_perfect(s);
  std::vector<std::int64_t> isolated;
  for (std::int64_t x = 1; x <= s.frobenius(); ++x) {
    if (!s.contains(x) && s.contains(x - 1) && s.contains(x + 1)) {
      isolated.push_back(x);
    }
  }
  if (format == "json") {
    json j;
    j["schema"] = 1;
    j["generators"] = s.generators();
    j["is_perfect"] = perfect;
    j["isolated_gaps"] = isolated;
    print_json(j);
  } else if (perfect) {
    std::cout << "<" << join(s.generators(), ",") << "> is perfect\n";
  } else {
    std::cout << "<" << join(s.generators(), ",") << "> is not perfect: "
              << isolated.size() << " isolated gaps\n"
              << join(isolated) << "\n";
  }
  return 0;
}

int run_verify(std::int64_t max_b, int workers) {
  const semigap::SweepSummary summary = semigap::verify_sweep(max_b, workers);
  for (const auto& f : summary.failures) {
    std::cout << "FAIL (a=" << f.a << ",b=" << f.b << ") " << f.property;
    if (!f.detail.empty()) std::cout << ": " << f.detail;
    std::cout << "\n";
  }
  std::cout << "verify: " << summary.pairs_checked
            << " coprime pairs with 1 < a < b <= " << summary.max_b << "\n";
  std::cout << "checks passed: " << summary.checks_passed << "\n";
  std::cout << "checks failed: " << summary.checks_failed << "\n";
  if (!summary.ok()) {
    return 1;
  }
  std::cout << "all properties hold\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"closed-form isolated gaps of numerical semigroups <a,b>"};
  app.require_subcommand(1);

  std::int64_t a = 0, b = 0, modulus = 0, max_b = 60;
  int workers = 0;
  std::string format = "json";
  std::vector<std::int64_t> generators;

  auto add_pair = [&](CLI::App* cmd) {
    cmd->add_option("a", a, "smaller generator")->required();
    cmd->add_option("b", b, "larger generator")->required();
  };

  CLI::App* analyze =
      app.add_subcommand("analyze", "full report for one semigroup <a,b>");
  add_pair(analyze);
  analyze->add_option("--format", format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();

  CLI::App* isolated =
      app.add_subcommand("isolated", "the isolated gaps of <a,b>");
  add_pair(isolated);
  isolated->add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  CLI::App* matrix =
      app.add_subcommand("matrix", "the gap matrix L(S) of <a,b>");
  add_pair(matrix);
  matrix->add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  CLI::App* partition = app.add_subcommand(
      "partition", "isolated gaps of <a,b> grouped by residue class");
  add_pair(partition);
  partition->add_option("--mod", modulus,
                        "modulus, a nonzero member (default: a)");
  partition->add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  CLI::App* perfect = app.add_subcommand(
      "perfect", "report whether a semigroup has no isolated gaps");
  perfect->add_option("generators", generators, "generating set, gcd 1")
      ->required()
      ->expected(-1);
  perfect->add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  CLI::App* verify = app.add_subcommand(
      "verify", "replay every property over all coprime pairs up to a bound");
  verify->add_option("--max-b", max_b, "largest b to sweep")
      ->envname("SEMIGAP_MAX_B")
      ->capture_default_str();
  verify->add_option("--workers", workers,
                     "worker threads, 0 = all available");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(analyze)) return run_analyze(a, b, format);
    if (app.got_subcommand(isolated)) return run_isolated(a, b, format);
    if (app.got_subcommand(matrix)) return run_matrix(a, b, format);
    if (app.got_subcommand(partition))
      return run_partition(a, b, modulus, partition->count("--mod") > 0,
                           format);
    if (app.got_subcommand(perfect)) return run_perfect(generators, format);
    if (app.got_subcommand(verify)) return run_verify(max_b, workers);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
