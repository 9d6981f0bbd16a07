#include "latcon/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace latcon {

  namespace {

    // Row-per-element bit matrix used while closing the cover relation.
    class BitRows {
     public:
      BitRows(std::size_t rows, std::size_t bits)
          : _words((bits + 63) / 64), _data(rows * _words, 0) {}

      void set(std::size_t row, std::size_t bit) {
        _data[row * _words + bit / 64] |= std::uint64_t(1) << (bit % 64);
      }

      bool test(std::size_t row, std::size_t bit) const {
        return (_data[row * _words + bit / 64] >> (bit % 64)) & 1;
      }

      void or_into(std::size_t dst, std::size_t src) {
        for (std::size_t w = 0; w < _words; ++w) {
          _data[dst * _words + w] |= _data[src * _words + w];
        }
      }

      std::size_t count(std::size_t row) const {
        std::size_t c = 0;
        for (std::size_t w = 0; w < _words; ++w) {
          c += std::popcount(_data[row * _words + w]);
        }
        return c;
      }

      // Writes row a & row b into out (size words()) and returns its popcount.
      std::size_t intersect(std::size_t a, std::size_t b, std::vector<std::uint64_t>& out) const {
        std::size_t c = 0;
        for (std::size_t w = 0; w < _words; ++w) {
          out[w] = _data[a * _words + w] & _data[b * _words + w];
          c += std::popcount(out[w]);
        }
        return c;
      }

      std::size_t words() const {
        return _words;
      }

     private:
      std::size_t                _words;
      std::vector<std::uint64_t> _data;
    };

    // Iterative DFS; throws CycleDetected with the first back edge's cycle.
    // Returns a topological order (every x before its successors).
    std::vector<Element> topological_order(std::vector<std::vector<Element>> const& succ) {
      std::size_t const         n = succ.size();
      std::vector<std::uint8_t> colour(n, 0);  // 0 new, 1 on stack, 2 done
      std::vector<Element>      post;
      post.reserve(n);
      std::vector<std::pair<Element, std::size_t>> stack;
      for (Element root = 0; root < n; ++root) {
        if (colour[root] != 0) {
          continue;
        }
        stack.emplace_back(root, 0);
        colour[root] = 1;
        while (!stack.empty()) {
          auto& [x, next] = stack.back();
          if (next < succ[x].size()) {
            Element y = succ[x][next++];
            if (colour[y] == 1) {
              std::vector<Element> cycle;
              auto it = std::find_if(stack.begin(), stack.end(), [y](auto const& frame) {
                return frame.first == y;
              });
              for (; it != stack.end(); ++it) {
                cycle.push_back(it->first);
              }
              throw CycleDetected(std::move(cycle));
            }
            if (colour[y] == 0) {
              colour[y] = 1;
              stack.emplace_back(y, 0);
            }
          } else {
            colour[x] = 2;
            post.push_back(x);
            stack.pop_back();
          }
        }
      }
      std::reverse(post.begin(), post.end());
      return post;
    }

    // Least element of the up-closed set `bounds` (popcount `count`): the
    // member whose own up-set has the same size. Also used on down-sets.
    std::optional<Element> least_of(std::vector<std::uint64_t> const& bounds,
                                    std::size_t                       count,
                                    std::vector<std::size_t> const&   up_count) {
      for (std::size_t w = 0; w < bounds.size(); ++w) {
        std::uint64_t word = bounds[w];
        while (word != 0) {
          auto const bit = static_cast<std::size_t>(std::countr_zero(word));
          word &= word - 1;
          auto const u = static_cast<Element>(w * 64 + bit);
          if (up_count[u] == count) {
            return u;
          }
        }
      }
      return std::nullopt;
    }

  }  // namespace

  void FiniteLattice::index_covers() {
    _cover.assign(_n * _n, 0);
    _upper.assign(_n, {});
    _lower.assign(_n, {});
    for (auto [x, y] : _covers) {
      _cover[index(x, y)] = 1;
      _upper[x].push_back(y);
      _lower[y].push_back(x);
    }
    for (std::size_t x = 0; x < _n; ++x) {
      std::sort(_upper[x].begin(), _upper[x].end());
      std::sort(_lower[x].begin(), _lower[x].end());
    }
  }

  FiniteLattice build_from_covers(std::size_t n, std::span<CoverPair const> cover_pairs) {
    if (n == 0) {
      throw InvalidInput("a lattice needs at least one element");
    }
    std::vector<std::vector<Element>> succ(n);
    for (auto [x, y] : cover_pairs) {
      if (x >= n || y >= n) {
        throw InvalidInput("cover pair (" + std::to_string(x) + ", " + std::to_string(y)
                           + ") has an element outside 0.." + std::to_string(n - 1));
      }
      if (x == y) {
        throw CycleDetected({x});
      }
      succ[x].push_back(y);
    }

    auto const order = topological_order(succ);

    BitRows up(n, n);
    BitRows down(n, n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      up.set(*it, *it);
      for (Element y : succ[*it]) {
        up.or_into(*it, y);
      }
    }
    for (Element x : order) {
      down.set(x, x);
      for (Element y : succ[x]) {
        down.or_into(y, x);
      }
    }

    // (x, y) is redundant iff some other supplied successor z of x has
    // z <= y; a duplicate pair is the case z == y.
    for (auto [x, y] : cover_pairs) {
      std::size_t seen_self = 0;
      for (Element z : succ[x]) {
        if (z == y) {
          if (++seen_self > 1) {
            throw NotReduced(x, y);
          }
        } else if (up.test(z, y)) {
          throw NotReduced(x, y);
        }
      }
    }

    FiniteLattice result;
    result._n = n;
    result._leq.assign(n * n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        result._leq[x * n + y] = up.test(x, y) ? 1 : 0;
      }
    }

    std::vector<std::size_t> up_count(n), down_count(n);
    for (std::size_t x = 0; x < n; ++x) {
      up_count[x]   = up.count(x);
      down_count[x] = down.count(x);
    }

    result._join.assign(n * n, 0);
    result._meet.assign(n * n, 0);
    std::vector<std::uint64_t> scratch(up.words());
    for (Element x = 0; x < n; ++x) {
      result._join[x * n + x] = x;
      result._meet[x * n + x] = x;
      for (Element y = x + 1; y < n; ++y) {
        std::size_t c = up.intersect(x, y, scratch);
        if (c == 0) {
          throw NotALattice(x, y, LatticeFailure::no_upper_bound);
        }
        auto j = least_of(scratch, c, up_count);
        if (!j) {
          throw NotALattice(x, y, LatticeFailure::no_least_upper_bound);
        }
        c = down.intersect(x, y, scratch);
        if (c == 0) {
          throw NotALattice(x, y, LatticeFailure::no_lower_bound);
        }
        auto m = least_of(scratch, c, down_count);
        if (!m) {
          throw NotALattice(x, y, LatticeFailure::no_greatest_lower_bound);
        }
        result._join[x * n + y] = result._join[y * n + x] = *j;
        result._meet[x * n + y] = result._meet[y * n + x] = *m;
      }
    }

    Element bottom = 0, top = 0;
    for (Element x = 1; x < n; ++x) {
      bottom = result._meet[bottom * n + x];
      top    = result._join[top * n + x];
    }
    result._bottom = bottom;
    result._top    = top;
    result._covers.assign(cover_pairs.begin(), cover_pairs.end());
    result.index_covers();

    // Longest chain length by DP over the topological order.
    std::vector<std::size_t> height(n, 0);
    for (Element x : order) {
      for (Element y : succ[x]) {
        height[y] = std::max(height[y], height[x] + 1);
      }
    }
    result._length = height[top];
    return result;
  }

  bool Interval::contains(Element x) const {
    return std::binary_search(members.begin(), members.end(), x);
  }

  Interval interval(FiniteLattice const& lattice, Element a, Element b) {
    if (a >= lattice.size() || b >= lattice.size()) {
      throw InvalidInput("interval endpoint out of range");
    }
    if (!lattice.leq(a, b)) {
      throw NotComparable(a, b);
    }
    Interval iv{a, b, {}};
    for (Element x = 0; x < lattice.size(); ++x) {
      if (lattice.leq(a, x) && lattice.leq(x, b)) {
        iv.members.push_back(x);
      }
    }
    return iv;
  }

  std::size_t interval_length(FiniteLattice const& lattice, Interval const& iv) {
    // Process members by decreasing number of members below them, which is a
    // reverse linear extension, so every upper cover is finished first.
    std::vector<std::pair<std::size_t, Element>> by_rank;
    by_rank.reserve(iv.members.size());
    for (Element x : iv.members) {
      std::size_t below = 0;
      for (Element y : iv.members) {
        below += lattice.leq(y, x) ? 1 : 0;
      }
      by_rank.emplace_back(below, x);
    }
    std::sort(by_rank.rbegin(), by_rank.rend());

    std::vector<std::size_t> to_top(lattice.size(), 0);
    for (auto [rank, x] : by_rank) {
      (void) rank;
      for (Element c : lattice.upper_covers(x)) {
        if (lattice.leq(c, iv.hi)) {
          to_top[x] = std::max(to_top[x], to_top[c] + 1);
        }
      }
    }
    return to_top[iv.lo];
  }

  FiniteLattice interval_sublattice(FiniteLattice const& lattice, Interval const& iv) {
    std::vector<Element> local(lattice.size(), 0);
    for (std::size_t i = 0; i < iv.members.size(); ++i) {
      local[iv.members[i]] = static_cast<Element>(i);
    }
    std::vector<CoverPair> covers;
    for (auto [x, y] : lattice.covers()) {
      if (iv.contains(x) && iv.contains(y)) {
        covers.emplace_back(local[x], local[y]);
      }
    }
    return build_from_covers(iv.members.size(), covers);
  }

  FiniteLattice dual_lattice(FiniteLattice const& lattice) {
    std::size_t const n = lattice.size();
    FiniteLattice     result;
    result._n = n;
    result._leq.assign(n * n, 0);
    result._join.assign(n * n, 0);
    result._meet.assign(n * n, 0);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        result._leq[x * n + y]  = lattice.leq(y, x) ? 1 : 0;
        result._join[x * n + y] = lattice.meet(x, y);
        result._meet[x * n + y] = lattice.join(x, y);
      }
    }
    result._bottom = lattice.top();
    result._top    = lattice.bottom();
    for (auto [x, y] : lattice.covers()) {
      result._covers.emplace_back(y, x);
    }
    result.index_covers();
    result._length = lattice.length();
    return result;
  }

  SemimodularityResult is_semimodular(FiniteLattice const& lattice) {
    std::size_t const n = lattice.size();
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (lattice.is_cover(lattice.meet(x, y), x) && !lattice.is_cover(y, lattice.join(x, y))) {
          return {false, std::make_pair(x, y)};
        }
      }
    }
    return {true, std::nullopt};
  }

  std::vector<CoveringSquare> covering_squares(FiniteLattice const& lattice) {
    std::vector<CoveringSquare> result;
    for (Element x = 0; x < lattice.size(); ++x) {
      auto const up = lattice.upper_covers(x);
      for (std::size_t i = 0; i < up.size(); ++i) {
        for (std::size_t j = i + 1; j < up.size(); ++j) {
          Element const w = lattice.join(up[i], up[j]);
          if (lattice.is_cover(up[i], w) && lattice.is_cover(up[j], w)) {
            result.push_back({x, up[i], up[j], w});
          }
        }
      }
    }
    return result;
  }

  std::size_t join_cover_configurations(FiniteLattice const& lattice) {
    std::size_t total = 0;
    for (Element x = 0; x < lattice.size(); ++x) {
      std::size_t const k = lattice.upper_covers(x).size();
      if (k >= 2) {
        total += k * (k - 1) / 2;
      }
    }
    return total;
  }

}  // namespace latcon
