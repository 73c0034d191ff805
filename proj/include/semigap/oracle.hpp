#pragma once

#include <cstdint>
#include <vector>

#include "semigap/core.hpp"

namespace semigap {

// Brute-force ground truth. Everything here recomputes membership from
// scratch by exhaustive nonnegative-combination closure and scans for the
// defining predicates directly. No code is shared with the closed forms
// or with GenericSemigroup beyond integer primitives, so agreement means
// something.

struct OracleReport {
  std::vector<std::int64_t> generators;
  std::vector<std::int64_t> gap_set;        // ascending
  std::vector<std::int64_t> isolated_gaps;  // ascending
  std::int64_t frobenius;                   // -1 when there are no gaps
  bool is_perfect;
};

OracleReport oracle_isolated_gaps(const std::vector<std::int64_t>& generators);

// Exhaustive search of the box |x| <= b/2, |y| <= a/2 for a*x + b*y = 1.
// Fails loudly unless exactly one solution exists there.
DlsSolution oracle_dls(std::int64_t a, std::int64_t b);

// Counts members s of <a,b> with s < F(S) and both neighbors outside the
// semigroup, by direct predicate scan.
std::int64_t oracle_count_T(std::int64_t a, std::int64_t b);

}  // namespace semigap
