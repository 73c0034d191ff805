#include <doctest.h>

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "semigap/core.hpp"
#include "semigap/oracle.hpp"

using semigap::DlsSolution;
using semigap::GenericSemigroup;
using semigap::PairSemigroup;

namespace {

// Literal nonnegative-combination search, the slowest possible membership
// test.
bool combination_member(std::int64_t a, std::int64_t b, std::int64_t x) {
  if (x < 0) return false;
  for (std::int64_t l1 = 0; l1 * a <= x; ++l1) {
    if ((x - l1 * a) % b == 0) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("extended_gcd returns a Bezout identity") {
  auto e = semigap::extended_gcd(9, 13);
  CHECK(e.g == 1);
  CHECK(9 * e.x + 13 * e.y == 1);

  e = semigap::extended_gcd(8, 12);
  CHECK(e.g == 4);
  CHECK(8 * e.x + 12 * e.y == 4);

  e = semigap::extended_gcd(1, 5);
  CHECK(e.g == 1);
  CHECK(e.x == 1);
  CHECK(e.y == 0);

  CHECK_THROWS_AS(semigap::extended_gcd(0, 5), std::invalid_argument);
}

TEST_CASE("dls known values") {
  auto check = [](std::int64_t a, std::int64_t b, std::int64_t u,
                  std::int64_t v) {
    const DlsSolution d = semigap::dls(a, b);
    CHECK(d.u == u);
    CHECK(d.v == v);
  };
  check(9, 13, 3, -2);
  check(8, 13, 5, -3);
  check(7, 11, -3, 2);
  check(7, 16, 7, -3);
  check(2, 3, -1, 1);
}

TEST_CASE("dls rejects bad input") {
  CHECK_THROWS_AS(semigap::dls(4, 6), std::invalid_argument);
  CHECK_THROWS_AS(semigap::dls(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(semigap::dls(13, 9), std::invalid_argument);
  CHECK_THROWS_AS(semigap::dls(9, 9), std::invalid_argument);
  CHECK_THROWS_AS(semigap::dls(std::int64_t{1} << 31, (std::int64_t{1} << 31) + 1),
                  std::invalid_argument);
}

TEST_CASE("dls is the unique box solution for every pair up to 60") {
  for (std::int64_t b = 3; b <= 60; ++b) {
    for (std::int64_t a = 2; a < b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const DlsSolution d = semigap::dls(a, b);
      CHECK(a * d.u + b * d.v == 1);
      CHECK(2 * std::abs(d.u) <= b);
      CHECK(2 * std::abs(d.v) <= a);
      CHECK(d.u != 0);
      CHECK(d.v != 0);
      CHECK((d.u < 0) != (d.v < 0));
      const DlsSolution box = semigap::oracle_dls(a, b);
      CHECK(box.u == d.u);
      CHECK(box.v == d.v);
    }
  }
}

TEST_CASE("pair membership known values") {
  const PairSemigroup s(9, 13);
  CHECK(s.frobenius() == 95);
  CHECK(s.contains(22));
  CHECK_FALSE(s.contains(95));
  CHECK(s.contains(96));
  CHECK(s.contains(0));
  CHECK_FALSE(s.contains(-1));
}

TEST_CASE("pair membership agrees with combination search") {
  for (auto [a, b] : {std::pair<std::int64_t, std::int64_t>{2, 3},
                      {9, 13},
                      {8, 13},
                      {7, 11}}) {
    const PairSemigroup s(a, b);
    for (std::int64_t x = 0; x <= a * b; ++x) {
      CAPTURE(a);
      CAPTURE(b);
      CAPTURE(x);
      REQUIRE(s.contains(x) == combination_member(a, b, x));
    }
  }
}

TEST_CASE("pair gaps census") {
  CHECK(PairSemigroup(2, 3).gaps() == std::vector<std::int64_t>{1});

  const auto g913 = PairSemigroup(9, 13).gaps();
  CHECK(g913.size() == 48);
  CHECK(g913.back() == 95);

  const auto g711 = PairSemigroup(7, 11).gaps();
  CHECK(g711.size() == 30);
  CHECK(g711.back() == 59);
}

TEST_CASE("gap count and maximum across pairs") {
  for (std::int64_t b = 3; b <= 40; ++b) {
    for (std::int64_t a = 2; a < b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const PairSemigroup s(a, b);
      const auto gaps = s.gaps();
      CHECK(static_cast<std::int64_t>(gaps.size()) == (a - 1) * (b - 1) / 2);
      CHECK(gaps.back() == s.frobenius());
    }
  }
}

TEST_CASE("every gap has the form ab - l*a - k*b with l,k >= 1") {
  for (auto [a, b] :
       {std::pair<std::int64_t, std::int64_t>{9, 13}, {7, 11}, {2, 3}}) {
    const PairSemigroup s(a, b);
    for (std::int64_t x : s.gaps()) {
      bool found = false;
      for (std::int64_t k = 1; !found && k < a; ++k) {
        const std::int64_t rest = a * b - x - k * b;
        found = rest >= a && rest % a == 0;
      }
      CAPTURE(x);
      CHECK(found);
    }
  }
}

TEST_CASE("apery set of a pair semigroup") {
  const GenericSemigroup s({9, 13});
  CHECK(s.apery_set(9) ==
        std::vector<std::int64_t>{0, 13, 26, 39, 52, 65, 78, 91, 104});
  CHECK(GenericSemigroup({2, 3}).apery_set(2) ==
        std::vector<std::int64_t>{0, 3});
}

TEST_CASE("apery set after adjoining a new generator") {
  const GenericSemigroup old({9, 13});
  const GenericSemigroup ext({9, 13, 64});
  const auto old_ap = old.apery_set(9);
  const auto new_ap = ext.apery_set(9);
  REQUIRE(new_ap.size() == 9);

  std::vector<std::int64_t> old_by_residue(9), new_by_residue(9);
  for (std::int64_t w : old_ap) old_by_residue[static_cast<std::size_t>(w % 9)] = w;
  std::vector<bool> seen(9, false);
  for (std::int64_t w : new_ap) {
    const auto r = static_cast<std::size_t>(w % 9);
    CHECK_FALSE(seen[r]);
    seen[r] = true;
    new_by_residue[r] = w;
    CHECK(ext.contains(w));
    CHECK_FALSE(ext.contains(w - 9));
  }
  for (std::size_t r = 0; r < 9; ++r) {
    CHECK(new_by_residue[r] <= old_by_residue[r]);
  }
}

TEST_CASE("apery set rejects non-members and zero") {
  const GenericSemigroup s({9, 13});
  CHECK_THROWS_AS(s.apery_set(0), std::invalid_argument);
  CHECK_THROWS_AS(s.apery_set(5), std::invalid_argument);
}

TEST_CASE("generic semigroup construction") {
  const GenericSemigroup s({9, 13});
  CHECK(s.frobenius() == 95);
  CHECK(s.minimal_generators() == std::vector<std::int64_t>{9, 13});
  CHECK(s.embedding_dimension() == 2);

  CHECK(GenericSemigroup({2, 3}).frobenius() == 1);
  CHECK(GenericSemigroup({9, 13, 22}).minimal_generators() ==
        std::vector<std::int64_t>{9, 13});
  CHECK(GenericSemigroup({13, 9}).frobenius() == 95);
}

TEST_CASE("generic semigroup of all nonnegative integers") {
  const GenericSemigroup n({1});
  CHECK(n.frobenius() == -1);
  CHECK(n.gaps().empty());
  CHECK(n.is_symmetric());
  CHECK(n.contains(0));
  CHECK(n.contains(123456));
  CHECK(n.minimal_generators() == std::vector<std::int64_t>{1});
}

TEST_CASE("generic semigroup rejects bad generating sets") {
  CHECK_THROWS_AS(GenericSemigroup({4, 6}), std::invalid_argument);
  CHECK_THROWS_AS(GenericSemigroup({}), std::invalid_argument);
  CHECK_THROWS_AS(GenericSemigroup({0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(GenericSemigroup({-2, 3}), std::invalid_argument);
}

TEST_CASE("symmetry") {
  CHECK(GenericSemigroup({9, 13}).is_symmetric());
  CHECK(GenericSemigroup({7, 16}).is_symmetric());
  CHECK_FALSE(GenericSemigroup({3, 4, 5}).is_symmetric());
}

TEST_CASE("generic membership closed under generator addition") {
  const GenericSemigroup s({6, 10, 15});
  CHECK(s.frobenius() == 29);
  for (std::int64_t x = 0; x <= s.frobenius(); ++x) {
    if (!s.contains(x)) continue;
    for (std::int64_t g : s.generators()) {
      CHECK(s.contains(x + g));
    }
  }
}

}  // TEST_SUITE
