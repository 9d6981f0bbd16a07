#include "latcon/relations.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>
#include <variant>

namespace latcon {

  namespace {
    constexpr std::uint32_t unassigned = static_cast<std::uint32_t>(-1);

    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), 0);
      }

      std::uint32_t find(std::uint32_t x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }

      void unite(std::uint32_t x, std::uint32_t y) {
        x = find(x);
        y = find(y);
        if (x != y) {
          _parent[std::max(x, y)] = std::min(x, y);
        }
      }

      std::vector<std::uint32_t> labels() {
        std::vector<std::uint32_t> out(_parent.size());
        for (std::uint32_t x = 0; x < out.size(); ++x) {
          out[x] = find(x);
        }
        return out;
      }

     private:
      std::vector<std::uint32_t> _parent;
    };
  }  // namespace

  BinaryRelation BinaryRelation::identity(std::size_t n) {
    BinaryRelation r(n);
    for (Element x = 0; x < n; ++x) {
      r.insert(x, x);
    }
    return r;
  }

  SetPartition SetPartition::from_labels(std::span<std::uint32_t const> labels) {
    SetPartition p;
    p._block_of.assign(labels.size(), 0);
    std::unordered_map<std::uint32_t, std::uint32_t> renumber;
    for (Element x = 0; x < labels.size(); ++x) {
      auto [it, fresh] = renumber.try_emplace(labels[x], static_cast<std::uint32_t>(renumber.size()));
      std::uint32_t const id = it->second;
      if (fresh) {
        p._blocks.emplace_back();
      }
      p._block_of[x] = id;
      p._blocks[id].push_back(x);
    }
    return p;
  }

  SetPartition SetPartition::discrete(std::size_t n) {
    std::vector<std::uint32_t> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    return from_labels(labels);
  }

  SetPartition SetPartition::full(std::size_t n) {
    std::vector<std::uint32_t> labels(n, 0);
    return from_labels(labels);
  }

  SetPartition partition_from_blocks(std::size_t n, std::vector<std::vector<Element>> const& blocks) {
    std::vector<std::uint32_t> labels(n, unassigned);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) {
        throw BadPartition("empty block " + std::to_string(b));
      }
      for (Element x : blocks[b]) {
        if (x >= n) {
          throw BadPartition("element " + std::to_string(x) + " out of range");
        }
        if (labels[x] != unassigned) {
          throw BadPartition("overlap at " + std::to_string(x));
        }
        labels[x] = static_cast<std::uint32_t>(b);
      }
    }
    for (Element x = 0; x < n; ++x) {
      if (labels[x] == unassigned) {
        throw BadPartition("element " + std::to_string(x) + " uncovered");
      }
    }
    return SetPartition::from_labels(labels);
  }

  BinaryRelation relation_of(SetPartition const& p) {
    BinaryRelation r(p.size());
    for (auto const& block : p.blocks()) {
      for (Element x : block) {
        for (Element y : block) {
          r.insert(x, y);
        }
      }
    }
    return r;
  }

  SetPartition partition_of(BinaryRelation const& r) {
    std::size_t const n = r.size();
    for (Element x = 0; x < n; ++x) {
      if (!r.contains(x, x)) {
        throw NotEquivalence("reflexivity", {x});
      }
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (r.contains(x, y) && !r.contains(y, x)) {
          throw NotEquivalence("symmetry", {x, y});
        }
      }
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (!r.contains(x, y)) {
          continue;
        }
        for (Element z = 0; z < n; ++z) {
          if (r.contains(y, z) && !r.contains(x, z)) {
            throw NotEquivalence("transitivity", {x, y, z});
          }
        }
      }
    }
    // Each element's block is labelled by its smallest related element.
    std::vector<std::uint32_t> labels(n);
    for (Element x = 0; x < n; ++x) {
      Element y = 0;
      while (!r.contains(x, y)) {
        ++y;
      }
      labels[x] = y;
    }
    return SetPartition::from_labels(labels);
  }

  bool is_equivalence(BinaryRelation const& r) {
    try {
      partition_of(r);
      return true;
    } catch (NotEquivalence const&) {
      return false;
    }
  }

  namespace {
    // Block id and witness of the first non-interval block, or bounds.
    std::variant<std::pair<std::size_t, Element>, std::vector<std::pair<Element, Element>>>
    interval_bounds(FiniteLattice const& lattice, SetPartition const& p) {
      if (p.size() != lattice.size()) {
        throw InvalidInput("partition has " + std::to_string(p.size()) + " elements, lattice has "
                           + std::to_string(lattice.size()));
      }
      std::vector<std::pair<Element, Element>> bounds;
      bounds.reserve(p.block_count());
      for (std::size_t b = 0; b < p.block_count(); ++b) {
        auto const& block = p.block(b);
        Element     lo    = block.front();
        Element     hi    = block.front();
        for (Element x : block) {
          lo = lattice.meet(lo, x);
          hi = lattice.join(hi, x);
        }
        for (Element x = 0; x < lattice.size(); ++x) {
          if (lattice.leq(lo, x) && lattice.leq(x, hi) && p.block_of(x) != b) {
            return std::make_pair(b, x);
          }
        }
        bounds.emplace_back(lo, hi);
      }
      return bounds;
    }
  }  // namespace

  IntervalPartition certify_interval_blocks(FiniteLattice const& lattice, SetPartition const& p) {
    auto result = interval_bounds(lattice, p);
    if (auto const* failure = std::get_if<0>(&result)) {
      throw NotIntervalBlocks(failure->first, failure->second);
    }
    return IntervalPartition(p, std::move(std::get<1>(result)));
  }

  std::optional<IntervalPartition> try_certify_interval_blocks(FiniteLattice const& lattice,
                                                               SetPartition const&  p) {
    auto result = interval_bounds(lattice, p);
    if (result.index() == 0) {
      return std::nullopt;
    }
    return IntervalPartition(p, std::move(std::get<1>(result)));
  }

  SetPartition restrict_partition(FiniteLattice const& lattice,
                                  SetPartition const&  p,
                                  Interval const&      iv) {
    if (p.size() != lattice.size()) {
      throw InvalidInput("partition and lattice sizes differ");
    }
    std::vector<std::uint32_t> labels;
    labels.reserve(iv.members.size());
    for (Element x : iv.members) {
      labels.push_back(static_cast<std::uint32_t>(p.block_of(x)));
    }
    return SetPartition::from_labels(labels);
  }

  bool partition_leq(SetPartition const& p, SetPartition const& q) {
    for (auto const& block : p.blocks()) {
      for (Element x : block) {
        if (!q.same_block(block.front(), x)) {
          return false;
        }
      }
    }
    return true;
  }

  SetPartition partition_meet(SetPartition const& p, SetPartition const& q) {
    std::size_t const          n = p.size();
    std::vector<std::uint32_t> labels(n);
    for (Element x = 0; x < n; ++x) {
      labels[x] = static_cast<std::uint32_t>(p.block_of(x) * n + q.block_of(x));
    }
    return SetPartition::from_labels(labels);
  }

  SetPartition partition_join(SetPartition const& p, SetPartition const& q) {
    UnionFind uf(p.size());
    for (auto const* part : {&p, &q}) {
      for (auto const& block : part->blocks()) {
        for (Element x : block) {
          uf.unite(block.front(), x);
        }
      }
    }
    auto labels = uf.labels();
    return SetPartition::from_labels(labels);
  }

  void for_each_partition(std::size_t                                                     n,
                          std::function<void(std::vector<std::uint32_t> const&)> const& fn) {
    // rgs[i] <= 1 + max(rgs[0..i-1]); prefix_max[i] = max(rgs[0..i]).
    std::vector<std::uint32_t> rgs(n, 0);
    std::vector<std::uint32_t> prefix_max(n, 0);
    if (n == 0) {
      fn(rgs);
      return;
    }
    while (true) {
      fn(rgs);
      std::size_t i = n - 1;
      while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) {
        --i;
      }
      if (i == 0) {
        return;
      }
      ++rgs[i];
      prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
      for (std::size_t j = i + 1; j < n; ++j) {
        rgs[j]        = 0;
        prefix_max[j] = prefix_max[i];
      }
    }
  }

  std::vector<std::vector<std::uint32_t>> all_restricted_growth_strings(std::size_t n) {
    std::vector<std::vector<std::uint32_t>> result;
    for_each_partition(n, [&result](auto const& rgs) { result.push_back(rgs); });
    return result;
  }

}  // namespace latcon
