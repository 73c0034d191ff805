#include "semigap/analysis.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace semigap {
namespace {

std::string join(const std::vector<std::int64_t>& xs, const char* sep = " ") {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << sep;
    out << xs[i];
  }
  return out.str();
}

}  // namespace

AnalysisDocument analyze_pair(std::int64_t a, std::int64_t b) {
  const PairSemigroup s(a, b);
  const IsolatedGapProfile profile = isolated_gaps(s);
  const GenericSemigroup smith = smith_extension(s);

  AnalysisDocument doc;
  doc.a = a;
  doc.b = b;
  doc.dls = s.dls();
  doc.frobenius = s.frobenius();
  doc.isolated_count = profile.count;
  doc.min_isolated_gap = profile.h;
  doc.isolated_gaps = profile.gaps;
  doc.matrix = gap_matrix(s);
  doc.partition_mod_a = residue_partition(s, a);
  doc.minimal_isolated_gaps = minimal_isolated_gaps(s);
  doc.dual_set = dual_set(s).elements;
  doc.h_signature = h_residue_signature(s);
  doc.smith_generators = smith.generators();
  doc.smith_is_perfect = is_perfect(smith);
  return doc;
}

std::string render_json(const AnalysisDocument& doc) {
  nlohmann::json j;
  j["schema"] = 1;
  j["generators"] = {doc.a, doc.b};
  j["dls"] = {{"u", doc.dls.u}, {"v", doc.dls.v}};
  j["frobenius"] = doc.frobenius;
  j["isolated_count"] = doc.isolated_count;
  j["min_isolated_gap"] = doc.min_isolated_gap;
  j["isolated_gaps"] = doc.isolated_gaps;
  j["gap_matrix"] = {{"rows", doc.matrix.rows},
                     {"cols", doc.matrix.cols},
                     {"entries", doc.matrix.entries}};
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& [residue, gaps] : doc.partition_mod_a.blocks) {
    blocks.push_back({{"residue", residue}, {"gaps", gaps}});
  }
  j["partition_mod_a"] = std::move(blocks);
  j["minimal_isolated_gaps"] = doc.minimal_isolated_gaps;
  j["dual_set"] = doc.dual_set;
  j["h_signature"] = {{"mod_a", doc.h_signature.mod_a},
                      {"mod_b", doc.h_signature.mod_b}};
  j["smith_extension"] = {{"generators", doc.smith_generators},
                          {"is_perfect", doc.smith_is_perfect}};
  return j.dump(2) + "\n";
}

std::string render_csv(const AnalysisDocument& doc) {
  std::ostringstream out;
  out << "gap,row_index,col_index,residue_mod_a\n";
  for (std::int64_t gap : doc.isolated_gaps) {
    std::int64_t row = -1, col = -1;
    for (std::int64_t i = 0; i < doc.matrix.rows && row < 0; ++i) {
      for (std::int64_t j = 0; j < doc.matrix.cols; ++j) {
        if (doc.matrix.entries[static_cast<std::size_t>(i)]
                              [static_cast<std::size_t>(j)] == gap) {
          row = i;
          col = j;
          break;
        }
      }
    }
    out << gap << ',' << row << ',' << col << ',' << gap % doc.a << '\n';
  }
  return out.str();
}

std::string render_table(const AnalysisDocument& doc) {
  std::ostringstream out;
  out << "semigroup             <" << doc.a << "," << doc.b << ">\n";
  out << "dls                   u=" << doc.dls.u << " v=" << doc.dls.v
      << "\n";
  out << "frobenius             " << doc.frobenius << "\n";
  out << "isolated count        " << doc.isolated_count << "\n";
  out << "min isolated gap      " << doc.min_isolated_gap << "\n";
  out << "isolated gaps         " << join(doc.isolated_gaps) << "\n";
  out << "minimal isolated gaps " << join(doc.minimal_isolated_gaps) << "\n";
  out << "dual set T(S)         " << join(doc.dual_set) << "\n";
  out << "h signature           (" << doc.h_signature.mod_a << ","
      << doc.h_signature.mod_b << ")\n";
  out << "smith extension       <" << join(doc.smith_generators, ",")
      << "> perfect=" << (doc.smith_is_perfect ? "true" : "false") << "\n";

  int width = 1;
  for (const auto& row : doc.matrix.entries) {
    for (std::int64_t x : row) {
      width = std::max(width,
                       static_cast<int>(std::to_string(x).size()));
    }
  }
  out << "gap matrix L(S)       " << doc.matrix.rows << " x "
      << doc.matrix.cols << "\n";
  for (const auto& row : doc.matrix.entries) {
    out << " ";
    for (std::int64_t x : row) {
      out << " " << std::setw(width) << x;
    }
    out << "\n";
  }
  out << "partition mod " << doc.a << "\n";
  for (const auto& [residue, gaps] : doc.partition_mod_a.blocks) {
    out << "  i=" << residue << "  " << join(gaps) << "\n";
  }
  return out.str();
}

}  // namespace semigap
