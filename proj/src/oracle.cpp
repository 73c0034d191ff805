#include "semigap/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace semigap {
namespace {

constexpr std::int64_t kMaxGenerator = std::int64_t{1} << 31;
constexpr std::int64_t kMaxTableSize = std::int64_t{1} << 28;

void validate_generators(const std::vector<std::int64_t>& generators) {
  if (generators.empty()) {
    throw std::invalid_argument("oracle: empty generating set");
  }
  std::int64_t g = 0;
  for (std::int64_t x : generators) {
    if (x < 1) {
      throw std::invalid_argument("oracle: generators must be positive");
    }
    if (x >= kMaxGenerator) {
      throw std::invalid_argument("oracle: generators must be below 2^31");
    }
    g = std::gcd(g, x);
  }
  if (g != 1) {
    throw std::invalid_argument("oracle: generators are not coprime");
  }
}

// Closure table: reach[x] iff x is a sum of generators.
std::vector<bool> closure_table(const std::vector<std::int64_t>& generators,
                                std::int64_t bound) {
  if (bound + 1 > kMaxTableSize) {
    throw std::length_error("oracle: semigroup too large for a closure table");
  }
  std::vector<bool> reach(static_cast<std::size_t>(bound + 1), false);
  reach[0] = true;
  for (std::int64_t x = 1; x <= bound; ++x) {
    for (std::int64_t g : generators) {
      if (g <= x && reach[static_cast<std::size_t>(x - g)]) {
        reach[static_cast<std::size_t>(x)] = true;
        break;
      }
    }
  }
  return reach;
}

}  // namespace

OracleReport oracle_isolated_gaps(
    const std::vector<std::int64_t>& generators) {
  validate_generators(generators);
  const auto [lo, hi] =
      std::minmax_element(generators.begin(), generators.end());
  // No gap exceeds (min-1)(max-1)-1, so min*max covers every scan below,
  // including the x+1 lookup at x = F(S).
  const std::int64_t bound = *lo * *hi;
  const std::vector<bool> reach = closure_table(generators, bound);

  OracleReport report;
  report.generators = generators;
  std::sort(report.generators.begin(), report.generators.end());
  report.frobenius = -1;
  for (std::int64_t x = bound; x >= 1; --x) {
    if (!reach[static_cast<std::size_t>(x)]) {
      report.frobenius = x;
      break;
    }
  }
  for (std::int64_t x = 1; x <= report.frobenius; ++x) {
    if (!reach[static_cast<std::size_t>(x)]) {
      report.gap_set.push_back(x);
      if (reach[static_cast<std::size_t>(x - 1)] &&
          reach[static_cast<std::size_t>(x + 1)]) {
        report.isolated_gaps.push_back(x);
      }
    }
  }
  report.is_perfect = report.isolated_gaps.empty();
  return report;
}

DlsSolution oracle_dls(std::int64_t a, std::int64_t b) {
  if (!(1 < a && a < b)) {
    throw std::invalid_argument("oracle_dls: require 1 < a < b");
  }
  if (b >= kMaxGenerator) {
    throw std::invalid_argument("oracle_dls: generators must be below 2^31");
  }
  if (std::gcd(a, b) != 1) {
    throw std::invalid_argument("oracle_dls: generators are not coprime");
  }
  std::int64_t hits = 0;
  DlsSolution found{0, 0};
  for (std::int64_t x = -(b / 2); x <= b / 2; ++x) {
    for (std::int64_t y = -(a / 2); y <= a / 2; ++y) {
      if (a * x + b * y == 1) {
        found = DlsSolution{x, y};
        ++hits;
      }
    }
  }
  if (hits != 1) {
    throw std::logic_error("oracle_dls: expected exactly one solution in the "
                           "box, found " + std::to_string(hits));
  }
  return found;
}

std::int64_t oracle_count_T(std::int64_t a, std::int64_t b) {
  if (!(1 < a && a < b) || std::gcd(a, b) != 1) {
    throw std::invalid_argument("oracle_count_T: require coprime 1 < a < b");
  }
  const std::int64_t bound = a * b;
  const std::vector<bool> reach = closure_table({a, b}, bound);
  std::int64_t frobenius = -1;
  for (std::int64_t x = bound; x >= 1; --x) {
    if (!reach[static_cast<std::size_t>(x)]) {
      frobenius = x;
      break;
    }
  }
  std::int64_t count = 0;
  for (std::int64_t s = 0; s < frobenius; ++s) {
    const bool prev_out = (s == 0) || !reach[static_cast<std::size_t>(s - 1)];
    if (reach[static_cast<std::size_t>(s)] && prev_out &&
        !reach[static_cast<std::size_t>(s + 1)]) {
      ++count;
    }
  }
  return count;
}

}  // namespace semigap
