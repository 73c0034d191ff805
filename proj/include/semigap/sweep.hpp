#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace semigap {

struct PropertyFailure {
  std::int64_t a;
  std::int64_t b;
  std::string property;
  std::string detail;
};

struct SweepSummary {
  std::int64_t max_b = 0;
  std::int64_t pairs_checked = 0;
  std::int64_t checks_passed = 0;
  std::int64_t checks_failed = 0;
  std::vector<PropertyFailure> failures;  // ordered by (b, a), then check order

  bool ok() const { return checks_failed == 0; }
};

// All coprime pairs 1 < a < b <= max_b, ordered by (b, a).
std::vector<std::pair<std::int64_t, std::int64_t>> coprime_pairs(
    std::int64_t max_b);

// Runs every closed-form-vs-oracle and structural property on one pair.
// Returns the failures; *checks_run receives the number of properties
// evaluated.
std::vector<PropertyFailure> check_pair(std::int64_t a, std::int64_t b,
                                        std::int64_t* checks_run);

// Replays every property over all coprime pairs up to max_b. The two
// entry points run the same per-pair checker; the first fans the pairs
// out over OpenMP threads (workers <= 0 means the OpenMP default), the
// second is the serial reference. Results are ordered by (b, a) either
// way, so the summaries must be identical.
SweepSummary verify_sweep(std::int64_t max_b, int workers = 0);
SweepSummary verify_sweep_serial(std::int64_t max_b);

}  // namespace semigap
