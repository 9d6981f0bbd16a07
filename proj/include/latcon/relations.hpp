#ifndef LATCON_RELATIONS_HPP
#define LATCON_RELATIONS_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "latcon/errors.hpp"
#include "latcon/lattice.hpp"

namespace latcon {

  // Dense n x n boolean table. No closure properties are assumed.
  class BinaryRelation {
   public:
    explicit BinaryRelation(std::size_t n) : _n(n), _pairs(n * n, 0) {}

    static BinaryRelation identity(std::size_t n);

    std::size_t size() const noexcept {
      return _n;
    }

    bool contains(Element x, Element y) const noexcept {
      return _pairs[x * _n + y] != 0;
    }

    void insert(Element x, Element y) {
      _pairs[x * _n + y] = 1;
    }

    void erase(Element x, Element y) {
      _pairs[x * _n + y] = 0;
    }

    bool operator==(BinaryRelation const&) const = default;

   private:
    std::size_t               _n;
    std::vector<std::uint8_t> _pairs;
  };

  //! An equivalence relation on 0, ..., size() - 1, stored as disjoint blocks.
  //!
  //! The representation is normalized: block ids are assigned in order of the
  //! smallest member and each block is sorted, so two partitions are equal iff
  //! their block_of vectors are equal, and block_of is the restricted-growth
  //! string of the partition.
  class SetPartition {
   public:
    // Any labelling of the elements; equal labels mean the same block.
    static SetPartition from_labels(std::span<std::uint32_t const> labels);

    static SetPartition discrete(std::size_t n);
    static SetPartition full(std::size_t n);

    std::size_t size() const noexcept {
      return _block_of.size();
    }

    std::size_t block_count() const noexcept {
      return _blocks.size();
    }

    std::size_t block_of(Element x) const noexcept {
      return _block_of[x];
    }

    bool same_block(Element x, Element y) const noexcept {
      return _block_of[x] == _block_of[y];
    }

    std::vector<Element> const& block(std::size_t id) const noexcept {
      return _blocks[id];
    }

    std::vector<std::vector<Element>> const& blocks() const noexcept {
      return _blocks;
    }

    std::vector<std::uint32_t> const& labels() const noexcept {
      return _block_of;
    }

    bool operator==(SetPartition const& that) const noexcept {
      return _block_of == that._block_of;
    }

    std::strong_ordering operator<=>(SetPartition const& that) const noexcept {
      return _block_of <=> that._block_of;
    }

   private:
    SetPartition() = default;

    std::vector<std::uint32_t>        _block_of;
    std::vector<std::vector<Element>> _blocks;
  };

  // Throws BadPartition on an empty block, an out-of-range element, an
  // element in two blocks, or an element in none.
  SetPartition partition_from_blocks(std::size_t n, std::vector<std::vector<Element>> const& blocks);

  BinaryRelation relation_of(SetPartition const& p);

  // Throws NotEquivalence naming the first failing axiom, checked in the
  // order reflexivity, symmetry, transitivity, each in lexicographic order.
  SetPartition partition_of(BinaryRelation const& r);

  bool is_equivalence(BinaryRelation const& r);

  //! A partition of a lattice's carrier each of whose blocks is an interval.
  //!
  //! Only certify_interval_blocks creates one, so holding an IntervalPartition
  //! is the proof that the interval-block hypothesis was checked.
  class IntervalPartition {
   public:
    SetPartition const& partition() const noexcept {
      return _base;
    }

    std::size_t size() const noexcept {
      return _base.size();
    }

    // (meet of block, join of block), indexed by block id.
    std::vector<std::pair<Element, Element>> const& bounds() const noexcept {
      return _bounds;
    }

    friend IntervalPartition certify_interval_blocks(FiniteLattice const&, SetPartition const&);
    friend std::optional<IntervalPartition> try_certify_interval_blocks(FiniteLattice const&,
                                                                        SetPartition const&);

   private:
    IntervalPartition(SetPartition base, std::vector<std::pair<Element, Element>> bounds)
        : _base(std::move(base)), _bounds(std::move(bounds)) {}

    SetPartition                             _base;
    std::vector<std::pair<Element, Element>> _bounds;
  };

  // Throws NotIntervalBlocks for the first block (by id) that is not the
  // interval between its meet and its join; the witness is the smallest
  // element of that interval outside the block.
  IntervalPartition certify_interval_blocks(FiniteLattice const& lattice, SetPartition const& p);

  // As above, but nullopt instead of NotIntervalBlocks.
  std::optional<IntervalPartition> try_certify_interval_blocks(FiniteLattice const& lattice,
                                                               SetPartition const&  p);

  //! The partition induced on iv.members, over the local labels of
  //! interval_sublattice(lattice, iv): local i stands for iv.members[i].
  SetPartition restrict_partition(FiniteLattice const& lattice,
                                  SetPartition const&  p,
                                  Interval const&      iv);

  // Refinement order: every block of p lies inside a block of q.
  bool         partition_leq(SetPartition const& p, SetPartition const& q);
  SetPartition partition_meet(SetPartition const& p, SetPartition const& q);
  SetPartition partition_join(SetPartition const& p, SetPartition const& q);

  //! Calls fn once for each partition of {0, ..., n - 1}, given as its
  //! restricted-growth string, in lexicographic order of those strings.
  void for_each_partition(std::size_t n, std::function<void(std::vector<std::uint32_t> const&)> const& fn);

  // Every restricted-growth string of length n, lexicographically ordered.
  std::vector<std::vector<std::uint32_t>> all_restricted_growth_strings(std::size_t n);

}  // namespace latcon

#endif  // LATCON_RELATIONS_HPP
