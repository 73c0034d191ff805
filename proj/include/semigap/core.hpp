#pragma once

#include <cstdint>
#include <vector>

namespace semigap {

// Extended Euclid: g = gcd(a,b) and a*x + b*y = g.
struct Bezout {
  std::int64_t g;
  std::int64_t x;
  std::int64_t y;
};

Bezout extended_gcd(std::int64_t a, std::int64_t b);

// The definitely least solution (d.l.s.) of a*x + b*y = 1: the unique
// solution (u,v) with |u| <= b/2 and |v| <= a/2. For 1 < a < b neither
// coefficient is zero and exactly one of them is negative.
struct DlsSolution {
  std::int64_t u;
  std::int64_t v;
};

DlsSolution dls(std::int64_t a, std::int64_t b);

// The numerical semigroup <a,b> = {m*a + n*b : m,n >= 0} for coprime
// 1 < a < b. Immutable; the d.l.s. and the Frobenius number ab-a-b are
// computed once at construction. Membership and gap queries are pure
// residue arithmetic, no tables.
class PairSemigroup {
 public:
  PairSemigroup(std::int64_t a, std::int64_t b);

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t frobenius() const { return frobenius_; }
  const DlsSolution& dls() const { return dls_; }

  // x is a member iff x >= 0 and x is at or above the smallest member of
  // its residue class mod a (that member is k*b with k*b == x mod a).
  bool contains(std::int64_t x) const;

  // All gaps in ascending order; there are (a-1)(b-1)/2 of them and the
  // largest is the Frobenius number.
  std::vector<std::int64_t> gaps() const;

 private:
  std::int64_t a_;
  std::int64_t b_;
  DlsSolution dls_;
  std::int64_t frobenius_;
};

// A numerical semigroup given by an arbitrary finite generating set with
// gcd 1. Builds a membership table up to the Frobenius number at
// construction; everything past the table is a member.
class GenericSemigroup {
 public:
  explicit GenericSemigroup(std::vector<std::int64_t> generators);

  const std::vector<std::int64_t>& generators() const { return generators_; }
  const std::vector<std::int64_t>& minimal_generators() const {
    return minimal_generators_;
  }
  std::size_t embedding_dimension() const { return minimal_generators_.size(); }

  // Largest integer outside the semigroup; -1 when the semigroup is all
  // of the nonnegative integers (generator 1 present).
  std::int64_t frobenius() const { return frobenius_; }

  bool contains(std::int64_t x) const;
  std::vector<std::int64_t> gaps() const;

  // Apery set of a nonzero member n: the n smallest members, one per
  // residue class mod n. Rejects n = 0 and non-members.
  std::vector<std::int64_t> apery_set(std::int64_t n) const;

  // True iff F(S) - x is a member for every gap x. The full set of
  // nonnegative integers has no gaps and counts as symmetric.
  bool is_symmetric() const;

 private:
  std::vector<std::int64_t> generators_;         // sorted, deduplicated
  std::vector<std::int64_t> minimal_generators_;
  std::int64_t frobenius_;
  std::vector<bool> member_;                     // indexed 0..frobenius_
};

}  // namespace semigap
