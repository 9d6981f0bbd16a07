#include "doctest.h"

#include "latcon/catalog.hpp"
#include "latcon/relations.hpp"
#include "oracles.hpp"

using namespace latcon;

namespace {
  std::vector<std::vector<Element>> mapped_blocks(SetPartition const& local, Interval const& iv) {
    std::vector<std::vector<Element>> out;
    for (auto const& block : local.blocks()) {
      auto& b = out.emplace_back();
      for (Element x : block) {
        b.push_back(iv.members[x]);
      }
    }
    return out;
  }

  std::vector<SetPartition> all_partitions(std::size_t n) {
    std::vector<SetPartition> out;
    for_each_partition(n, [&](auto const& rgs) { out.push_back(SetPartition::from_labels(rgs)); });
    return out;
  }
}  // namespace

TEST_CASE("partition_from_blocks") {
  auto const p = partition_from_blocks(3, {{0, 1}, {2}});
  CHECK(p.block_count() == 2);
  CHECK(p.same_block(0, 1));
  CHECK_FALSE(p.same_block(1, 2));

  auto message = [](auto&& f) {
    try {
      f();
    } catch (BadPartition const& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message([] { partition_from_blocks(3, {{0}, {0, 1}, {2}}); }) == "overlap at 0");
  CHECK(message([] { partition_from_blocks(3, {{0}, {2}}); }) == "element 1 uncovered");
  CHECK(message([] { partition_from_blocks(3, {{0, 1}, {}, {2}}); }) == "empty block 1");
  CHECK(message([] { partition_from_blocks(3, {{0, 1, 2, 3}}); }) == "element 3 out of range");
}

TEST_CASE("normalized block order") {
  auto const p = partition_from_blocks(5, {{4, 2}, {3}, {1, 0}});
  CHECK(p.blocks() == std::vector<std::vector<Element>>{{0, 1}, {2, 4}, {3}});
  CHECK(p.labels() == std::vector<std::uint32_t>{0, 0, 1, 2, 1});
  CHECK(p == partition_from_blocks(5, {{0, 1}, {3}, {2, 4}}));
}

TEST_CASE("relation_of and partition_of") {
  auto const r = relation_of(partition_from_blocks(3, {{0, 1}, {2}}));
  for (Element x = 0; x < 3; ++x) {
    for (Element y = 0; y < 3; ++y) {
      bool const expected = x == y || (x < 2 && y < 2);
      CHECK(r.contains(x, y) == expected);
    }
  }

  auto asym = BinaryRelation::identity(3);
  asym.insert(0, 2);
  try {
    partition_of(asym);
    FAIL("expected NotEquivalence");
  } catch (NotEquivalence const& e) {
    CHECK(e.axiom() == "symmetry");
    CHECK(e.elements() == std::vector<Element>{0, 2});
  }

  auto intrans = BinaryRelation::identity(3);
  for (auto [x, y] : {std::pair{0, 1}, {1, 0}, {1, 2}, {2, 1}}) {
    intrans.insert(x, y);
  }
  try {
    partition_of(intrans);
    FAIL("expected NotEquivalence");
  } catch (NotEquivalence const& e) {
    CHECK(e.axiom() == "transitivity");
    CHECK(e.elements() == std::vector<Element>{0, 1, 2});
  }

  BinaryRelation empty(2);
  CHECK_THROWS_AS(partition_of(empty), NotEquivalence);
}

TEST_CASE("relation_of and partition_of are inverse on equivalences") {
  // Enumerate every symmetric reflexive relation on up to 4 elements and
  // keep the transitive ones: Bell(n) of them.
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::pair<Element, Element>> offdiag;
    for (Element x = 0; x < n; ++x) {
      for (Element y = x + 1; y < n; ++y) {
        offdiag.emplace_back(x, y);
      }
    }
    std::size_t equivalences = 0;
    for (std::uint32_t mask = 0; mask < (1u << offdiag.size()); ++mask) {
      auto r = BinaryRelation::identity(n);
      for (std::size_t i = 0; i < offdiag.size(); ++i) {
        if (mask >> i & 1) {
          r.insert(offdiag[i].first, offdiag[i].second);
          r.insert(offdiag[i].second, offdiag[i].first);
        }
      }
      if (is_equivalence(r)) {
        ++equivalences;
        CHECK(relation_of(partition_of(r)) == r);
      }
    }
    CHECK(equivalences == oracle::bell(n));
  }
}

TEST_CASE("for_each_partition counts Bell numbers") {
  std::uint64_t const bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
  for (std::size_t n = 0; n <= 10; ++n) {
    std::uint64_t count = 0;
    std::vector<std::uint32_t> previous;
    bool ordered = true;
    for_each_partition(n, [&](auto const& rgs) {
      ++count;
      ordered = ordered && (previous.empty() || previous < rgs);
      // Every string is already normalized.
      ordered = ordered && SetPartition::from_labels(rgs).labels() == rgs;
      previous = rgs;
    });
    CHECK(count == bell[n]);
    CHECK(oracle::bell(n) == bell[n]);
    CHECK(ordered);
  }
}

TEST_CASE("certify_interval_blocks") {
  auto const b2 = catalog::boolean(2);
  auto const ip = certify_interval_blocks(b2, partition_from_blocks(4, {{0, 1}, {2, 3}}));
  CHECK(ip.bounds() == std::vector<std::pair<Element, Element>>{{0, 1}, {2, 3}});

  auto const n5  = catalog::n5();
  auto const ip5 = certify_interval_blocks(n5, partition_from_blocks(5, {{0, 2}, {1}, {3}, {4}}));
  CHECK(ip5.bounds() == std::vector<std::pair<Element, Element>>{{0, 2}, {1, 1}, {3, 3}, {4, 4}});

  try {
    certify_interval_blocks(b2, partition_from_blocks(4, {{1, 2}, {0}, {3}}));
    FAIL("expected NotIntervalBlocks");
  } catch (NotIntervalBlocks const& e) {
    // Normalized ids: {0} is block 0, {1, 2} block 1.
    CHECK(e.block() == 1);
    CHECK(e.witness() == 0);
  }
  CHECK_FALSE(try_certify_interval_blocks(b2, partition_from_blocks(4, {{1, 2}, {0}, {3}})));
  // Convex hole: {0, 2} in a 3-chain misses 1.
  CHECK_THROWS_AS(certify_interval_blocks(catalog::chain(3), partition_from_blocks(3, {{0, 2}, {1}})),
                  NotIntervalBlocks);
}

TEST_CASE("certification matches the interval definition") {
  for (auto const& [name, l] : oracle::small_catalog()) {
    if (l.size() > 8) {
      continue;
    }
    CAPTURE(name);
    for_each_partition(l.size(), [&](auto const& rgs) {
      auto const p = SetPartition::from_labels(rgs);
      CHECK(try_certify_interval_blocks(l, p).has_value() == oracle::has_interval_blocks(l, p));
    });
  }
}

TEST_CASE("restrict_partition") {
  auto const n5 = catalog::n5();
  auto const p  = partition_from_blocks(5, {{1, 3}, {0}, {2}, {4}});
  auto const iv = interval(n5, 1, 4);
  CHECK(mapped_blocks(restrict_partition(n5, p, iv), iv)
        == std::vector<std::vector<Element>>{{1, 3}, {4}});

  auto const whole = interval(n5, n5.bottom(), n5.top());
  CHECK(restrict_partition(n5, p, whole) == p);

  auto const c3  = catalog::chain(3);
  auto const iv3 = interval(c3, 1, 2);
  CHECK(mapped_blocks(restrict_partition(c3, partition_from_blocks(3, {{0, 1}, {2}}), iv3), iv3)
        == std::vector<std::vector<Element>>{{1}, {2}});
}

TEST_CASE("restriction to an interval keeps interval blocks") {
  for (auto const& [name, l] : oracle::small_catalog()) {
    if (l.size() > 8) {
      continue;
    }
    CAPTURE(name);
    std::vector<Interval> intervals;
    for (Element a = 0; a < l.size(); ++a) {
      for (Element b = 0; b < l.size(); ++b) {
        if (l.leq(a, b)) {
          intervals.push_back(interval(l, a, b));
        }
      }
    }
    std::size_t failures = 0;
    for_each_partition(l.size(), [&](auto const& rgs) {
      auto const p = SetPartition::from_labels(rgs);
      if (!try_certify_interval_blocks(l, p)) {
        return;
      }
      for (auto const& iv : intervals) {
        auto const sub = interval_sublattice(l, iv);
        failures += try_certify_interval_blocks(sub, restrict_partition(l, p, iv)) ? 0 : 1;
      }
    });
    CHECK(failures == 0);
  }
}

TEST_CASE("partition order, meet and join") {
  auto const a = partition_from_blocks(3, {{0, 1, 2}});
  auto const b = partition_from_blocks(3, {{0, 1}, {2}});
  CHECK(partition_meet(a, b) == b);

  auto const c = partition_from_blocks(4, {{0, 1}, {2}, {3}});
  auto const d = partition_from_blocks(4, {{1, 2}, {0}, {3}});
  CHECK(partition_join(c, d) == partition_from_blocks(4, {{0, 1, 2}, {3}}));

  CHECK(partition_leq(SetPartition::discrete(4), c));
  CHECK(partition_leq(c, SetPartition::full(4)));
  CHECK_FALSE(partition_leq(c, d));
}

TEST_CASE("partitions of n <= 4 form a lattice under refinement") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const all = all_partitions(n);
    bool       ok  = true;
    for (auto const& p : all) {
      for (auto const& q : all) {
        auto const m = partition_meet(p, q);
        auto const j = partition_join(p, q);
        ok = ok && partition_leq(m, p) && partition_leq(m, q);
        ok = ok && partition_leq(p, j) && partition_leq(q, j);
        // m is the greatest lower bound and j the least upper bound.
        for (auto const& r : all) {
          if (partition_leq(r, p) && partition_leq(r, q)) {
            ok = ok && partition_leq(r, m);
          }
          if (partition_leq(p, r) && partition_leq(q, r)) {
            ok = ok && partition_leq(j, r);
          }
          ok = ok && partition_meet(partition_meet(p, q), r) == partition_meet(p, partition_meet(q, r));
          ok = ok && partition_join(partition_join(p, q), r) == partition_join(p, partition_join(q, r));
        }
        ok = ok && partition_meet(p, partition_join(p, q)) == p;
        ok = ok && partition_join(p, partition_meet(p, q)) == p;
        ok = ok && (partition_leq(p, q) && partition_leq(q, p)) == (p == q);
      }
    }
    CHECK(ok);
  }
}
