#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semigap/core.hpp"
#include "semigap/isolated.hpp"

namespace semigap {

// Everything the analyze command reports for one pair, in one place.
// Rendering is deterministic: keys sorted, lists ascending, so repeated
// runs are byte-identical.
struct AnalysisDocument {
  std::int64_t a;
  std::int64_t b;
  DlsSolution dls;
  std::int64_t frobenius;
  std::int64_t isolated_count;
  std::int64_t min_isolated_gap;
  std::vector<std::int64_t> isolated_gaps;
  GapMatrix matrix;
  ResiduePartition partition_mod_a;
  std::vector<std::int64_t> minimal_isolated_gaps;
  std::vector<std::int64_t> dual_set;
  HSignature h_signature;
  std::vector<std::int64_t> smith_generators;
  bool smith_is_perfect;
};

AnalysisDocument analyze_pair(std::int64_t a, std::int64_t b);

// JSON with sorted keys, 2-space indent, trailing newline. Parsing the
// output and re-serializing reproduces it byte for byte.
std::string render_json(const AnalysisDocument& doc);

// One row per isolated gap: gap, 0-based matrix position, residue mod a.
std::string render_csv(const AnalysisDocument& doc);

// Aligned, human-readable text, including the gap matrix.
std::string render_table(const AnalysisDocument& doc);

}  // namespace semigap
