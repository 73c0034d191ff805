#include "semigap/sweep.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "semigap/core.hpp"
#include "semigap/isolated.hpp"
#include "semigap/oracle.hpp"

namespace semigap {
namespace {

std::string join(const std::vector<std::int64_t>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ' ';
    out << xs[i];
  }
  return out.str();
}

// Collects property failures for one pair; every expect() is one check.
class PairChecker {
 public:
  PairChecker(std::int64_t a, std::int64_t b)
      : a_(a), b_(b), s_(a, b), oracle_(oracle_isolated_gaps({a, b})),
        profile_(isolated_gaps(s_)) {}

  std::vector<PropertyFailure> run() {
    check_dls();
    check_membership();
    check_gap_census();
    check_gap_representation();
    check_apery();
    check_generic_pair();
    check_isolated_against_oracle();
    check_matrix();
    check_partition_mod_a();
    check_partition_preimages();
    check_dual_set();
    check_smith_extension();
    check_h_signature();
    check_block_steps();
    return std::move(failures_);
  }

  std::int64_t checks_run() const { return checks_; }

 private:
  void expect(bool cond, const char* property, std::string detail = {}) {
    ++checks_;
    if (!cond) failures_.push_back({a_, b_, property, std::move(detail)});
  }

  void check_dls() {
    const DlsSolution d = s_.dls();
    expect(a_ * d.u + b_ * d.v == 1, "dls-bezout-identity");
    expect(2 * std::abs(d.u) <= b_ && 2 * std::abs(d.v) <= a_,
           "dls-box-bounds");
    expect(d.u != 0 && d.v != 0 && (d.u < 0) != (d.v < 0),
           "dls-sign-structure");
    try {
      const DlsSolution box = oracle_dls(a_, b_);
      expect(box.u == d.u && box.v == d.v, "dls-oracle-box-agrees");
    } catch (const std::logic_error& e) {
      expect(false, "dls-oracle-box-unique", e.what());
    }
  }

  // Closed-form membership vs the exhaustive combination closure, over
  // the whole table range [0, ab].
  void check_membership() {
    const std::int64_t bound = a_ * b_;
    std::vector<bool> reach(static_cast<std::size_t>(bound + 1), false);
    reach[0] = true;
    for (std::int64_t x = 1; x <= bound; ++x) {
      reach[static_cast<std::size_t>(x)] =
          (x >= a_ && reach[static_cast<std::size_t>(x - a_)]) ||
          (x >= b_ && reach[static_cast<std::size_t>(x - b_)]);
    }
    bool agree = s_.contains(-1) == false;
    for (std::int64_t x = 0; x <= bound && agree; ++x) {
      agree = s_.contains(x) == reach[static_cast<std::size_t>(x)];
    }
    expect(agree, "membership-matches-closure");
  }

  void check_gap_census() {
    const std::vector<std::int64_t> gaps = s_.gaps();
    expect(static_cast<std::int64_t>(gaps.size()) ==
               (a_ - 1) * (b_ - 1) / 2,
           "gap-count-symmetric");
    expect(!gaps.empty() && gaps.back() == s_.frobenius(),
           "max-gap-is-frobenius");
    expect(gaps == oracle_.gap_set, "gap-set-matches-oracle");
    expect(oracle_.frobenius == s_.frobenius(), "oracle-frobenius");
  }

  // Every gap has the form ab - l*a - k*b with l,k >= 1, found
  // constructively.
  void check_gap_representation() {
    bool all_found = true;
    for (std::int64_t x : oracle_.gap_set) {
      const std::int64_t target = a_ * b_ - x;
      bool found = false;
      for (std::int64_t k = 1; k * b_ + a_ <= target && !found; ++k) {
        const std::int64_t rest = target - k * b_;
        found = rest % a_ == 0;
      }
      if (!found) {
        all_found = false;
        break;
      }
    }
    expect(all_found, "gap-representation-ab-la-kb");
  }

  void check_apery() {
    const GenericSemigroup g({a_, b_});
    const std::vector<std::int64_t> ap = g.apery_set(a_);
    std::vector<std::int64_t> expected;
    for (std::int64_t k = 0; k < a_; ++k) expected.push_back(k * b_);
    expect(ap == expected, "apery-of-a-multiples-of-b");
    std::set<std::int64_t> residues;
    bool predecessors_out = true;
    for (std::int64_t w : ap) {
      residues.insert(w % a_);
      predecessors_out = predecessors_out && !g.contains(w - a_);
    }
    expect(static_cast<std::int64_t>(residues.size()) == a_,
           "apery-complete-residue-system");
    expect(predecessors_out, "apery-predecessors-outside");
  }

  void check_generic_pair() {
    const GenericSemigroup g({a_, b_});
    expect(g.frobenius() == a_ * b_ - a_ - b_, "generic-pair-frobenius");
    expect(g.minimal_generators() == std::vector<std::int64_t>({a_, b_}) &&
               g.embedding_dimension() == 2,
           "generic-pair-minimal-generators");
    expect(g.is_symmetric(), "generic-pair-symmetric");
  }

  void check_isolated_against_oracle() {
    expect(profile_.gaps == oracle_.isolated_gaps, "isolated-set-oracle",
           "closed form {" + join(profile_.gaps) + "} vs oracle {" +
               join(oracle_.isolated_gaps) + "}");
    const std::int64_t uv =
        std::abs(s_.dls().u) * std::abs(s_.dls().v);
    expect(isolated_count(s_) == uv, "isolated-count-uv");
    expect(static_cast<std::int64_t>(oracle_.isolated_gaps.size()) == uv,
           "isolated-count-oracle");
    expect(oracle_count_T(a_, b_) == uv, "count-T-oracle");
    expect(!oracle_.isolated_gaps.empty() &&
               min_isolated_gap(s_) == oracle_.isolated_gaps.front(),
           "min-isolated-gap-oracle");
    expect(!oracle_.isolated_gaps.empty() &&
               oracle_.isolated_gaps.back() == s_.frobenius(),
           "frobenius-in-isolated-set");
  }

  void check_matrix() {
    const GapMatrix up = gap_matrix(s_);
    const GapMatrix down = gap_matrix_from_frobenius(s_);
    expect(up.rows == down.rows && up.cols == down.cols &&
               up.entries == down.entries,
           "matrix-two-routes-identical");
    expect(up.rows == std::abs(s_.dls().v) && up.cols == std::abs(s_.dls().u),
           "matrix-shape");
    expect(up.entries.front().front() == profile_.h &&
               up.entries.back().back() == s_.frobenius(),
           "matrix-corners");
    bool steps = true;
    std::vector<std::int64_t> flat;
    for (std::size_t i = 0; i < up.entries.size(); ++i) {
      for (std::size_t j = 0; j < up.entries[i].size(); ++j) {
        flat.push_back(up.entries[i][j]);
        if (j + 1 < up.entries[i].size()) {
          steps = steps && up.entries[i][j + 1] - up.entries[i][j] == a_;
        }
        if (i + 1 < up.entries.size()) {
          steps = steps && up.entries[i + 1][j] - up.entries[i][j] == b_;
        }
      }
    }
    expect(steps, "matrix-row-col-steps");
    std::sort(flat.begin(), flat.end());
    expect(flat == profile_.gaps, "matrix-entries-are-isolated-gaps");
  }

  void check_partition_mod_a() {
    const ResiduePartition part = residue_partition(s_, a_);
    const std::int64_t au = std::abs(s_.dls().u);
    const std::int64_t av = std::abs(s_.dls().v);
    expect(static_cast<std::int64_t>(part.blocks.size()) == av,
           "partition-block-count");
    bool uniform = true;
    bool progressions = true;
    std::vector<std::int64_t> minima;
    for (const auto& [r, block] : part.blocks) {
      uniform = uniform &&
                static_cast<std::int64_t>(block.size()) == au;
      for (std::size_t k = 0; k < block.size(); ++k) {
        progressions = progressions &&
                       block[k] == block.front() +
                                       static_cast<std::int64_t>(k) * a_;
      }
      minima.push_back(block.front());
    }
    expect(uniform, "partition-block-size");
    expect(progressions, "partition-block-progression");
    std::sort(minima.begin(), minima.end());
    expect(minima == minimal_isolated_gaps(s_), "partition-block-minima");
    std::vector<std::int64_t> expected;
    for (std::int64_t k = 0; k < av; ++k) {
      expected.push_back(profile_.h + k * b_);
    }
    expect(minimal_isolated_gaps(s_) == expected, "minimal-gaps-h-plus-kb");
  }

  // Preimages F(S)-x of any residue block are congruent mod the modulus,
  // for a few sample member moduli.
  void check_partition_preimages() {
    for (std::int64_t m : {a_, b_, a_ + b_}) {
      const ResiduePartition part = residue_partition(s_, m);
      std::size_t covered = 0;
      bool congruent = true;
      for (const auto& [r, block] : part.blocks) {
        covered += block.size();
        const std::int64_t witness =
            ((s_.frobenius() - block.front()) % m + m) % m;
        for (std::int64_t x : block) {
          congruent = congruent && (s_.frobenius() - x) % m == witness;
        }
      }
      expect(covered == profile_.gaps.size(), "partition-covers-isolated");
      expect(congruent, "partition-preimage-congruent");
    }
  }

  void check_dual_set() {
    const DualSet t = dual_set(s_);
    expect(t.elements.size() == profile_.gaps.size(), "dual-set-cardinality");
    bool predicate = true;
    std::vector<std::int64_t> mapped;
    for (std::int64_t x : t.elements) {
      predicate = predicate && s_.contains(x) && x < s_.frobenius() &&
                  !s_.contains(x - 1) && !s_.contains(x + 1);
      mapped.push_back(s_.frobenius() - x);
    }
    expect(predicate, "dual-set-raw-predicate");
    std::sort(mapped.begin(), mapped.end());
    expect(mapped == profile_.gaps, "dual-set-bijection");
    // Lemma-style characterization: T(S) is exactly the grid
    // {l1*a + l2*b : l1 < |u|, l2 < |v|}.
    std::vector<std::int64_t> grid;
    for (std::int64_t l1 = 0; l1 < std::abs(s_.dls().u); ++l1) {
      for (std::int64_t l2 = 0; l2 < std::abs(s_.dls().v); ++l2) {
        grid.push_back(l1 * a_ + l2 * b_);
      }
    }
    std::sort(grid.begin(), grid.end());
    expect(grid == t.elements, "dual-set-grid-characterization");
  }

  void check_smith_extension() {
    const GenericSemigroup ext = smith_extension(s_);
    expect(is_perfect(ext), "smith-extension-perfect");
    const OracleReport check =
        oracle_isolated_gaps({a_, b_, profile_.h});
    expect(check.is_perfect, "smith-extension-perfect-oracle");
  }

  void check_h_signature() {
    const HSignature sig = h_residue_signature(s_);
    const bool allowed = (sig.mod_a == 1 && sig.mod_b == -1) ||
                         (sig.mod_a == -1 && sig.mod_b == 1);
    expect(profile_.h == 1 || allowed, "h-signature-allowed",
           "h=" + std::to_string(profile_.h) + " signature (" +
               std::to_string(sig.mod_a) + "," + std::to_string(sig.mod_b) +
               ")");
  }

  // Stepping by a stays inside the residue block until the first landing
  // in S, which is a multiple of b.
  void check_block_steps() {
    std::set<std::int64_t> iso(profile_.gaps.begin(), profile_.gaps.end());
    bool step_ok = true;
    bool escape_ok = true;
    for (std::int64_t x : profile_.gaps) {
      if (!s_.contains(x + a_)) {
        step_ok = step_ok && iso.count(x + a_) > 0;
      }
      std::int64_t y = x + a_;
      while (!s_.contains(y)) y += a_;
      escape_ok = escape_ok && y % b_ == 0;
    }
    expect(step_ok, "isolated-step-a-stays-isolated");
    expect(escape_ok, "isolated-escape-lands-on-multiple-of-b");
  }

  std::int64_t a_;
  std::int64_t b_;
  PairSemigroup s_;
  OracleReport oracle_;
  IsolatedGapProfile profile_;
  std::int64_t checks_ = 0;
  std::vector<PropertyFailure> failures_;
};

SweepSummary run_sweep(std::int64_t max_b, int workers, bool parallel) {
  if (max_b < 3) {
    throw std::invalid_argument(
        "verify: empty range, no coprime pairs with 1 < a < b <= " +
        std::to_string(max_b));
  }
  const auto pairs = coprime_pairs(max_b);
  const std::int64_t n = static_cast<std::int64_t>(pairs.size());
  std::vector<std::vector<PropertyFailure>> failures(pairs.size());
  std::vector<std::int64_t> counts(pairs.size(), 0);

  if (parallel) {
#ifdef _OPENMP
    const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t i = 0; i < n; ++i) {
      failures[static_cast<std::size_t>(i)] =
          check_pair(pairs[static_cast<std::size_t>(i)].first,
                     pairs[static_cast<std::size_t>(i)].second,
                     &counts[static_cast<std::size_t>(i)]);
    }
#else
    (void)workers;
    parallel = false;
#endif
  }
  if (!parallel) {
    for (std::int64_t i = 0; i < n; ++i) {
      failures[static_cast<std::size_t>(i)] =
          check_pair(pairs[static_cast<std::size_t>(i)].first,
                     pairs[static_cast<std::size_t>(i)].second,
                     &counts[static_cast<std::size_t>(i)]);
    }
  }

  SweepSummary summary;
  summary.max_b = max_b;
  summary.pairs_checked = n;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    summary.checks_passed +=
        counts[i] - static_cast<std::int64_t>(failures[i].size());
    summary.checks_failed += static_cast<std::int64_t>(failures[i].size());
    summary.failures.insert(summary.failures.end(), failures[i].begin(),
                            failures[i].end());
  }
  return summary;
}

}  // namespace

std::vector<std::pair<std::int64_t, std::int64_t>> coprime_pairs(
    std::int64_t max_b) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::int64_t b = 3; b <= max_b; ++b) {
    for (std::int64_t a = 2; a < b; ++a) {
      if (std::gcd(a, b) == 1) pairs.emplace_back(a, b);
    }
  }
  return pairs;
}

std::vector<PropertyFailure> check_pair(std::int64_t a, std::int64_t b,
                                        std::int64_t* checks_run) {
  PairChecker checker(a, b);
  std::vector<PropertyFailure> failures = checker.run();
  if (checks_run != nullptr) *checks_run = checker.checks_run();
  return failures;
}

SweepSummary verify_sweep(std::int64_t max_b, int workers) {
  return run_sweep(max_b, workers, true);
}

SweepSummary verify_sweep_serial(std::int64_t max_b) {
  return run_sweep(max_b, 1, false);
}

}  // namespace semigap
