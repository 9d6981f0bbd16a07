#include "latcon/catalog.hpp"

#include <vector>

namespace latcon::catalog {

  FiniteLattice chain(std::size_t n) {
    if (n == 0) {
      throw InvalidInput("a chain needs at least one element");
    }
    std::vector<CoverPair> covers;
    for (Element x = 0; x + 1 < n; ++x) {
      covers.emplace_back(x, x + 1);
    }
    return build_from_covers(n, covers);
  }

  FiniteLattice boolean(std::size_t k) {
    if (k > 16) {
      throw TooLarge(std::size_t(1) << k, std::size_t(1) << 16);
    }
    std::size_t const      n = std::size_t(1) << k;
    std::vector<CoverPair> covers;
    for (Element m = 0; m < n; ++m) {
      for (std::size_t bit = 0; bit < k; ++bit) {
        Element const mask = Element(1) << bit;
        if ((m & mask) == 0) {
          covers.emplace_back(m, m | mask);
        }
      }
    }
    return build_from_covers(n, covers);
  }

  FiniteLattice m3() {
    return build_from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
  }

  FiniteLattice n5() {
    return build_from_covers(5, {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}});
  }

  FiniteLattice covering_square() {
    return boolean(2);
  }

  FiniteLattice direct_product(FiniteLattice const& first,
                               FiniteLattice const& second,
                               std::size_t          limit) {
    std::size_t const n = first.size() * second.size();
    if (n > limit) {
      throw TooLarge(n, limit);
    }
    auto const             width = static_cast<Element>(second.size());
    std::vector<CoverPair> covers;
    for (auto [x, y] : first.covers()) {
      for (Element j = 0; j < width; ++j) {
        covers.emplace_back(x * width + j, y * width + j);
      }
    }
    for (Element i = 0; i < first.size(); ++i) {
      for (auto [x, y] : second.covers()) {
        covers.emplace_back(i * width + x, i * width + y);
      }
    }
    return build_from_covers(n, covers);
  }

  FiniteLattice grid(std::size_t p, std::size_t q) {
    return direct_product(chain(p), chain(q));
  }

  FiniteLattice ordinal_sum(FiniteLattice const& lower, FiniteLattice const& upper) {
    std::size_t const    n = lower.size() + upper.size() - 1;
    std::vector<Element> relabel(upper.size());
    auto                 next = static_cast<Element>(lower.size());
    for (Element x = 0; x < upper.size(); ++x) {
      relabel[x] = x == upper.bottom() ? lower.top() : next++;
    }
    std::vector<CoverPair> covers(lower.covers().begin(), lower.covers().end());
    for (auto [x, y] : upper.covers()) {
      covers.emplace_back(relabel[x], relabel[y]);
    }
    return build_from_covers(n, covers);
  }

}  // namespace latcon::catalog
