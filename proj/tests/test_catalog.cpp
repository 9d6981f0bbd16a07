#include "doctest.h"

#include "latcon/catalog.hpp"
#include "latcon/congruence.hpp"
#include "oracles.hpp"

using namespace latcon;

namespace {
  std::vector<CoverPair> cover_list(FiniteLattice const& l) {
    return {l.covers().begin(), l.covers().end()};
  }
}  // namespace

TEST_CASE("chain") {
  auto const c1 = catalog::chain(1);
  CHECK(c1.size() == 1);
  CHECK(c1.covers().empty());
  auto const c4 = catalog::chain(4);
  CHECK(cover_list(c4) == std::vector<CoverPair>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(c4.length() == 3);
  CHECK_THROWS_AS(catalog::chain(0), InvalidInput);
}

TEST_CASE("boolean") {
  auto const b2 = catalog::boolean(2);
  CHECK(b2.size() == 4);
  CHECK(cover_list(b2) == std::vector<CoverPair>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(b2.length() == 2);
  CHECK(catalog::boolean(0).size() == 1);
  CHECK(catalog::covering_square() == b2);

  auto const b3 = catalog::boolean(3);
  for (Element x = 0; x < 8; ++x) {
    for (Element y = 0; y < 8; ++y) {
      CHECK(b3.leq(x, y) == ((x & ~y) == 0));
      CHECK(b3.join(x, y) == (x | y));
      CHECK(b3.meet(x, y) == (x & y));
    }
  }
  CHECK_THROWS_AS(catalog::boolean(17), TooLarge);
}

TEST_CASE("dual of a boolean lattice is itself under complement") {
  for (std::size_t k = 0; k <= 4; ++k) {
    auto const     b    = catalog::boolean(k);
    auto const     d    = dual_lattice(b);
    Element const  mask = (Element(1) << k) - 1;
    bool           ok   = true;
    for (Element x = 0; x <= mask; ++x) {
      for (Element y = 0; y <= mask; ++y) {
        ok = ok && d.leq(x, y) == b.leq(x ^ mask, y ^ mask);
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("m3 and n5") {
  auto const m3 = catalog::m3();
  CHECK(m3.size() == 5);
  CHECK(m3.length() == 2);
  CHECK(is_semimodular(m3).holds);

  auto const n5 = catalog::n5();
  CHECK(cover_list(n5) == std::vector<CoverPair>{{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}});
  CHECK(n5.length() == 3);
  CHECK_FALSE(is_semimodular(n5).holds);
}

TEST_CASE("direct_product and grid") {
  auto const g22 = catalog::grid(2, 2);
  CHECK(g22 == catalog::boolean(2));
  CHECK(all_congruences(g22).size() == 4);

  for (auto const& [name, l] : oracle::small_catalog()) {
    CAPTURE(name);
    CHECK(catalog::direct_product(l, catalog::chain(1)) == l);
    CHECK(catalog::direct_product(catalog::chain(1), l) == l);
  }

  auto const g = catalog::grid(3, 4);
  CHECK(g.size() == 12);
  CHECK(g.length() == 5);
  for (Element a = 0; a < 12; ++a) {
    for (Element b = 0; b < 12; ++b) {
      CHECK(g.leq(a, b) == (a / 4 <= b / 4 && a % 4 <= b % 4));
    }
  }

  CHECK_THROWS_AS(catalog::grid(65, 65), TooLarge);
  CHECK(catalog::direct_product(catalog::chain(3), catalog::chain(3), 9).size() == 9);
  CHECK_THROWS_AS(catalog::direct_product(catalog::chain(3), catalog::chain(3), 8), TooLarge);
}

TEST_CASE("congruences of small grids") {
  for (std::size_t p = 1; p <= 3; ++p) {
    for (std::size_t q = 1; q <= 3; ++q) {
      CAPTURE(p);
      CAPTURE(q);
      auto const g = catalog::grid(p, q);
      CHECK(oracle::congruences(g).size() == (std::size_t(1) << (p + q - 2)));
      CHECK(all_congruences(g).size() == (std::size_t(1) << (p + q - 2)));
    }
  }
}

TEST_CASE("grids are semimodular") {
  for (std::size_t p = 1; p <= 5; ++p) {
    for (std::size_t q = 1; q <= 5; ++q) {
      CHECK(is_semimodular(catalog::grid(p, q)).holds);
    }
  }
}

TEST_CASE("ordinal_sum") {
  CHECK(catalog::ordinal_sum(catalog::chain(3), catalog::chain(3)) == catalog::chain(5));

  auto const s = catalog::ordinal_sum(catalog::boolean(2), catalog::chain(2));
  CHECK(s.size() == 5);
  CHECK(s.length() == 3);
  CHECK(s.bottom() == 0);
  CHECK(s.top() == 4);
  CHECK(s.is_cover(3, 4));
  CHECK(all_congruences(s).size() == 8);

  CHECK(catalog::ordinal_sum(catalog::chain(1), catalog::n5()) == catalog::n5());
  CHECK(catalog::ordinal_sum(catalog::n5(), catalog::chain(1)) == catalog::n5());
}
