#ifndef LATCON_CATALOG_HPP
#define LATCON_CATALOG_HPP

#include <cstddef>

#include "latcon/lattice.hpp"

namespace latcon::catalog {

  // Labelings are fixed; tests and fixtures depend on them.

  // 0 < 1 < ... < n - 1. Requires n >= 1.
  FiniteLattice chain(std::size_t n);

  // Subsets of {0, ..., k - 1} labelled by bitmask; covers (m, m | bit)
  // listed by ascending m, then ascending bit.
  FiniteLattice boolean(std::size_t k);

  // Bottom 0, atoms 1, 2, 3, top 4.
  FiniteLattice m3();

  // 0 < 1 < 3 < 4 and 0 < 2 < 4; covers listed (0,1), (1,3), (3,4), (0,2), (2,4).
  FiniteLattice n5();

  // boolean(2): 0 < 1, 0 < 2, 1 < 3, 2 < 3.
  FiniteLattice covering_square();

  inline constexpr std::size_t default_product_limit = 4096;

  // (i, j) is labelled i * |second| + j. Throws TooLarge if the product has
  // more than `limit` elements.
  FiniteLattice direct_product(FiniteLattice const& first,
                               FiniteLattice const& second,
                               std::size_t          limit = default_product_limit);

  // chain(p) x chain(q), row-major.
  FiniteLattice grid(std::size_t p, std::size_t q);

  // `upper` stacked on `lower` with top(lower) identified with bottom(upper).
  // Elements of `lower` keep their labels; the other elements of `upper`
  // follow in label order.
  FiniteLattice ordinal_sum(FiniteLattice const& lower, FiniteLattice const& upper);

}  // namespace latcon::catalog

#endif  // LATCON_CATALOG_HPP
