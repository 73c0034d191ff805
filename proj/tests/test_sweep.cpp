#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "semigap/sweep.hpp"

TEST_SUITE("sweep") {

TEST_CASE("coprime pair enumeration") {
  const auto pairs13 = semigap::coprime_pairs(13);
  CHECK(pairs13.size() == 45);
  CHECK(std::find(pairs13.begin(), pairs13.end(),
                  std::pair<std::int64_t, std::int64_t>{9, 13}) !=
        pairs13.end());
  CHECK(std::find(pairs13.begin(), pairs13.end(),
                  std::pair<std::int64_t, std::int64_t>{8, 13}) !=
        pairs13.end());
  CHECK(std::is_sorted(pairs13.begin(), pairs13.end(),
                       [](const auto& p, const auto& q) {
                         return std::pair(p.second, p.first) <
                                std::pair(q.second, q.first);
                       }));

  CHECK(semigap::coprime_pairs(60).size() == 1042);
  CHECK(semigap::coprime_pairs(3).size() == 1);
}

TEST_CASE("single pair check passes") {
  std::int64_t checks = 0;
  const auto failures = semigap::check_pair(9, 13, &checks);
  CHECK(failures.empty());
  CHECK(checks > 20);
}

TEST_CASE("serial sweep passes") {
  const auto summary = semigap::verify_sweep_serial(30);
  CHECK(summary.ok());
  CHECK(summary.pairs_checked ==
        static_cast<std::int64_t>(semigap::coprime_pairs(30).size()));
  CHECK(summary.checks_failed == 0);
  CHECK(summary.checks_passed > summary.pairs_checked);
  CHECK(summary.failures.empty());
}

TEST_CASE("openmp sweep matches the serial reference") {
  const auto serial = semigap::verify_sweep_serial(30);
  for (int workers : {1, 2, 4}) {
    const auto parallel = semigap::verify_sweep(30, workers);
    CHECK(parallel.pairs_checked == serial.pairs_checked);
    CHECK(parallel.checks_passed == serial.checks_passed);
    CHECK(parallel.checks_failed == serial.checks_failed);
    CHECK(parallel.failures.size() == serial.failures.size());
  }
}

TEST_CASE("sweep rejects an empty range") {
  CHECK_THROWS_AS(semigap::verify_sweep(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(semigap::verify_sweep_serial(-5), std::invalid_argument);
}

}  // TEST_SUITE
