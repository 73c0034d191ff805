#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "semigap/core.hpp"

namespace semigap {

// An isolated gap of S is a gap x with both x-1 and x+1 in S. For
// S = <a,b> with d.l.s. (u,v) there are exactly |u*v| of them, the
// smallest is h = F(S) - (|u|-1)a - (|v|-1)b, and the whole set is
// { h + i*b + j*a : 0 <= i < |v|, 0 <= j < |u| }.

struct IsolatedGapProfile {
  std::int64_t count;               // = |u| * |v|
  std::int64_t h;                   // smallest isolated gap
  std::vector<std::int64_t> gaps;   // all isolated gaps, ascending
};

// The |v| x |u| matrix whose entries enumerate the isolated gaps:
// entries[i][j] = h + i*b + j*a (0-based). Rows step by b, columns by a;
// the top-left entry is h and the bottom-right is F(S).
struct GapMatrix {
  std::int64_t rows;                // = |v|
  std::int64_t cols;                // = |u|
  std::vector<std::vector<std::int64_t>> entries;
};

// Isolated gaps grouped by residue class mod m, empty classes omitted.
// Residue 0 cannot occur (a multiple of a member is a member); hitting it
// is reported as a logic error rather than dropped.
struct ResiduePartition {
  std::int64_t modulus;
  std::map<std::int64_t, std::vector<std::int64_t>> blocks;  // residue -> gaps
  std::map<std::int64_t, std::int64_t> minima;               // residue -> min
};

// T(S): members s below F(S) (or s = 0) with both neighbors outside S.
// In bijection with the isolated gaps via x -> F(S) - x.
struct DualSet {
  std::vector<std::int64_t> elements;  // ascending
};

// Residues of h = min I(S) mod a and mod b, reported in the symmetric
// convention (a-1 maps to -1, b-1 maps to -1). Unless h = 1 the pair is
// (1,-1) or (-1,1).
struct HSignature {
  std::int64_t mod_a;
  std::int64_t mod_b;
};

std::int64_t isolated_count(const PairSemigroup& s);
std::int64_t min_isolated_gap(const PairSemigroup& s);
IsolatedGapProfile isolated_gaps(const PairSemigroup& s);

// Two algebraic routes to the same matrix: from h upward, and from F(S)
// downward. They must agree entry by entry.
GapMatrix gap_matrix(const PairSemigroup& s);
GapMatrix gap_matrix_from_frobenius(const PairSemigroup& s);

ResiduePartition residue_partition(const PairSemigroup& s, std::int64_t m);
std::vector<std::int64_t> minimal_isolated_gaps(const PairSemigroup& s);
DualSet dual_set(const PairSemigroup& s);

bool is_perfect(const GenericSemigroup& s);
GenericSemigroup smith_extension(const PairSemigroup& s);
HSignature h_residue_signature(const PairSemigroup& s);

}  // namespace semigap
