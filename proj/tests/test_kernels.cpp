#include "doctest.h"

#include "latcon/catalog.hpp"
#include "latcon/congruence.hpp"
#include "latcon/kernels.hpp"
#include "oracles.hpp"

using namespace latcon;

TEST_CASE("serial and parallel brute force agree") {
  for (auto const& [name, l] : oracle::small_catalog()) {
    CAPTURE(name);
    auto const s = serial::brute_force_congruences(l, 16);
    auto const p = parallel::brute_force_congruences(l, 16);
    CHECK(s == p);
    if (l.size() <= 8) {
      auto expected = oracle::congruences(l);
      normalize_congruence_order(expected);
      CHECK(s == expected);
    }
  }
  auto const g = catalog::grid(3, 4);
  CHECK(serial::brute_force_congruences(g, 12) == parallel::brute_force_congruences(g, 12));
  CHECK(parallel::brute_force_congruences(g, 12).size() == 32);
}

TEST_CASE("serial and parallel sweeps agree") {
  for (auto const& [name, l] : oracle::small_catalog()) {
    CAPTURE(name);
    auto const s = serial::sweep_interval_partitions(l, 9);
    auto const p = parallel::sweep_interval_partitions(l, 9);
    CHECK(s == p);
    CHECK(s.partitions == oracle::bell(l.size()));
    CHECK(s.disagreements == 0);
    CHECK(s.dual_disagreements == 0);
    CHECK(s.disagreeing.empty());
    CHECK(s.congruences == oracle::congruences(l).size());
  }
}

TEST_CASE("interval partition counts") {
  // On a chain every interval partition is a congruence: 2^(n-1) of each.
  auto const s = serial::sweep_interval_partitions(catalog::chain(5), 9);
  CHECK(s.interval_partitions == 16);
  CHECK(s.congruences == 16);

  std::uint64_t expected = 0;
  auto const    n5       = catalog::n5();
  for_each_partition(5, [&](auto const& rgs) {
    expected += oracle::has_interval_blocks(n5, SetPartition::from_labels(rgs)) ? 1 : 0;
  });
  CHECK(serial::sweep_interval_partitions(n5, 9).interval_partitions == expected);
}

TEST_CASE("size guards") {
  auto const c = catalog::chain(11);
  CHECK_THROWS_AS(serial::brute_force_congruences(c, 10), TooLarge);
  CHECK_THROWS_AS(parallel::brute_force_congruences(c, 10), TooLarge);
  CHECK_THROWS_AS(serial::sweep_interval_partitions(c, 10), TooLarge);
  CHECK_THROWS_AS(parallel::sweep_interval_partitions(c, 10), TooLarge);
  try {
    serial::brute_force_congruences(c, 10);
  } catch (TooLarge const& e) {
    CHECK(e.n() == 11);
    CHECK(e.limit() == 10);
  }
  CHECK(parallel::max_threads() >= 1);
}
