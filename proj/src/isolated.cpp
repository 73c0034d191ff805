#include "semigap/isolated.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace semigap {

std::int64_t isolated_count(const PairSemigroup& s) {
  return std::abs(s.dls().u) * std::abs(s.dls().v);
}

std::int64_t min_isolated_gap(const PairSemigroup& s) {
  const std::int64_t au = std::abs(s.dls().u);
  const std::int64_t av = std::abs(s.dls().v);
  const std::int64_t h = s.frobenius() - (au - 1) * s.a() - (av - 1) * s.b();
  assert(h >= 1);
  return h;
}

IsolatedGapProfile isolated_gaps(const PairSemigroup& s) {
  const std::int64_t au = std::abs(s.dls().u);
  const std::int64_t av = std::abs(s.dls().v);
  const std::int64_t h = min_isolated_gap(s);
  IsolatedGapProfile profile;
  profile.count = au * av;
  profile.h = h;
  profile.gaps.reserve(static_cast<std::size_t>(profile.count));
  for (std::int64_t i = 0; i < av; ++i) {
    for (std::int64_t j = 0; j < au; ++j) {
      profile.gaps.push_back(h + i * s.b() + j * s.a());
    }
  }
  std::sort(profile.gaps.begin(), profile.gaps.end());
  return profile;
}

GapMatrix gap_matrix(const PairSemigroup& s) {
  const std::int64_t au = std::abs(s.dls().u);
  const std::int64_t av = std::abs(s.dls().v);
  const std::int64_t h = min_isolated_gap(s);
  GapMatrix m{av, au, {}};
  m.entries.resize(static_cast<std::size_t>(av));
  for (std::int64_t i = 0; i < av; ++i) {
    auto& row = m.entries[static_cast<std::size_t>(i)];
    row.resize(static_cast<std::size_t>(au));
    for (std::int64_t j = 0; j < au; ++j) {
      row[static_cast<std::size_t>(j)] = h + i * s.b() + j * s.a();
    }
  }
  return m;
}

GapMatrix gap_matrix_from_frobenius(const PairSemigroup& s) {
  const std::int64_t au = std::abs(s.dls().u);
  const std::int64_t av = std::abs(s.dls().v);
  GapMatrix m{av, au, {}};
  m.entries.resize(static_cast<std::size_t>(av));
  for (std::int64_t i = 0; i < av; ++i) {
    auto& row = m.entries[static_cast<std::size_t>(i)];
    row.resize(static_cast<std::size_t>(au));
    for (std::int64_t j = 0; j < au; ++j) {
      // 1-based rule F - (|u|-j)a - (|v|-i)b, with i,j here 0-based.
      row[static_cast<std::size_t>(j)] =
          s.frobenius() - (au - 1 - j) * s.a() - (av - 1 - i) * s.b();
    }
  }
  return m;
}

ResiduePartition residue_partition(const PairSemigroup& s, std::int64_t m) {
  if (m <= 0 || !s.contains(m)) {
    throw std::invalid_argument(
        "residue_partition: modulus must be a nonzero member of the semigroup");
  }
  ResiduePartition part;
  part.modulus = m;
  for (std::int64_t g : isolated_gaps(s).gaps) {
    const std::int64_t r = g % m;
    if (r == 0) {
      throw std::logic_error(
          "residue_partition: isolated gap divisible by a member");
    }
    part.blocks[r].push_back(g);
  }
  for (const auto& [r, block] : part.blocks) {
    part.minima[r] = block.front();
  }
  if (m == s.a()) {
    // The partition mod a is uniform: |v| blocks of |u| gaps each.
    const std::size_t au = static_cast<std::size_t>(std::abs(s.dls().u));
    const std::size_t av = static_cast<std::size_t>(std::abs(s.dls().v));
    if (part.blocks.size() != av) {
      throw std::logic_error("residue_partition: expected |v| blocks mod a");
    }
    for (const auto& [r, block] : part.blocks) {
      if (block.size() != au) {
        throw std::logic_error(
            "residue_partition: expected |u| gaps per block mod a");
      }
    }
  }
  return part;
}

std::vector<std::int64_t> minimal_isolated_gaps(const PairSemigroup& s) {
  const std::int64_t av = std::abs(s.dls().v);
  const std::int64_t h = min_isolated_gap(s);
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(av));
  for (std::int64_t k = 0; k < av; ++k) out.push_back(h + k * s.b());
  return out;
}

DualSet dual_set(const PairSemigroup& s) {
  DualSet t;
  const IsolatedGapProfile profile = isolated_gaps(s);
  t.elements.reserve(profile.gaps.size());
  for (auto it = profile.gaps.rbegin(); it != profile.gaps.rend(); ++it) {
    t.elements.push_back(s.frobenius() - *it);
  }
  return t;
}

bool is_perfect(const GenericSemigroup& s) {
  for (std::int64_t x = 1; x <= s.frobenius(); ++x) {
    if (!s.contains(x) && s.contains(x - 1) && s.contains(x + 1)) {
      return false;
    }
  }
  return true;
}

GenericSemigroup smith_extension(const PairSemigroup& s) {
  return GenericSemigroup({s.a(), s.b(), min_isolated_gap(s)});
}

HSignature h_residue_signature(const PairSemigroup& s) {
  const std::int64_t h = min_isolated_gap(s);
  std::int64_t ra = h % s.a();
  std::int64_t rb = h % s.b();
  if (ra == s.a() - 1) ra = -1;
  if (rb == s.b() - 1) rb = -1;
  return HSignature{ra, rb};
}

}  // namespace semigap
