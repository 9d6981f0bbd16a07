#ifndef LATCON_LATTICE_HPP
#define LATCON_LATTICE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "latcon/errors.hpp"

namespace latcon {

  // (lower, upper): lower is covered by upper.
  using CoverPair = std::pair<Element, Element>;

  //! A validated finite lattice on the elements 0, ..., size() - 1.
  //!
  //! Instances only come out of build_from_covers (or operations that derive
  //! a lattice from a validated one), so every FiniteLattice satisfies the
  //! lattice axioms. The order, the cover relation, and the join and meet
  //! tables are all precomputed; every query below is a table lookup.
  //!
  //! The cover pairs are kept in the order they were supplied, which is what
  //! makes the text and JSON formats round-trip exactly.
  class FiniteLattice {
   public:
    std::size_t size() const noexcept {
      return _n;
    }

    bool leq(Element x, Element y) const noexcept {
      return _leq[index(x, y)] != 0;
    }

    bool lt(Element x, Element y) const noexcept {
      return x != y && leq(x, y);
    }

    bool is_cover(Element x, Element y) const noexcept {
      return _cover[index(x, y)] != 0;
    }

    Element join(Element x, Element y) const noexcept {
      return _join[index(x, y)];
    }

    Element meet(Element x, Element y) const noexcept {
      return _meet[index(x, y)];
    }

    Element bottom() const noexcept {
      return _bottom;
    }

    Element top() const noexcept {
      return _top;
    }

    std::span<CoverPair const> covers() const noexcept {
      return _covers;
    }

    // Sorted ascending.
    std::span<Element const> upper_covers(Element x) const noexcept {
      return _upper[x];
    }

    // Sorted ascending.
    std::span<Element const> lower_covers(Element x) const noexcept {
      return _lower[x];
    }

    // Length of the whole lattice, i.e. of [bottom, top].
    std::size_t length() const noexcept {
      return _length;
    }

    // Same carrier and same order; the order in which covers were supplied
    // is not compared.
    bool operator==(FiniteLattice const& that) const noexcept {
      return _n == that._n && _leq == that._leq;
    }

    friend FiniteLattice build_from_covers(std::size_t, std::span<CoverPair const>);
    friend FiniteLattice dual_lattice(FiniteLattice const&);

   private:
    FiniteLattice() = default;

    std::size_t index(Element x, Element y) const noexcept {
      return static_cast<std::size_t>(x) * _n + y;
    }

    void index_covers();

    std::size_t                       _n = 0;
    std::vector<std::uint8_t>         _leq;
    std::vector<std::uint8_t>         _cover;
    std::vector<Element>              _join;
    std::vector<Element>              _meet;
    std::vector<CoverPair>            _covers;
    std::vector<std::vector<Element>> _upper;
    std::vector<std::vector<Element>> _lower;
    Element                           _bottom = 0;
    Element                           _top    = 0;
    std::size_t                       _length = 0;
  };

  //! Builds and validates the lattice whose Hasse diagram is `cover_pairs`.
  //!
  //! Validation is eager: the order is the reflexive-transitive closure of
  //! the pairs, and every pair of elements must have a unique least upper
  //! bound and greatest lower bound.
  //!
  //! Throws InvalidInput (n == 0 or an out-of-range element), CycleDetected,
  //! NotReduced (a pair implied by the others, including duplicates), or
  //! NotALattice (first failing pair in lexicographic order, join tested
  //! before meet).
  FiniteLattice build_from_covers(std::size_t n, std::span<CoverPair const> cover_pairs);

  inline FiniteLattice build_from_covers(std::size_t                      n,
                                         std::vector<CoverPair> const& cover_pairs) {
    return build_from_covers(n, std::span<CoverPair const>(cover_pairs));
  }

  struct Interval {
    Element              lo;
    Element              hi;
    std::vector<Element> members;  // ascending

    bool contains(Element x) const;

    bool operator==(Interval const&) const = default;
  };

  // Throws NotComparable unless a <= b.
  Interval interval(FiniteLattice const& lattice, Element a, Element b);

  // Number of covers in a longest chain from iv.lo to iv.hi.
  std::size_t interval_length(FiniteLattice const& lattice, Interval const& iv);

  // The interval as a lattice in its own right; element i of the result is
  // iv.members[i].
  FiniteLattice interval_sublattice(FiniteLattice const& lattice, Interval const& iv);

  //! The order dual: x <= y in the result iff y <= x in `lattice`.
  //!
  //! Labels are unchanged, join and meet swap, and every cover pair (x, y)
  //! becomes (y, x) in the same position.
  FiniteLattice dual_lattice(FiniteLattice const& lattice);

  struct SemimodularityResult {
    bool holds;
    // First (x, y) in lexicographic order with x ^ y < x a cover but
    // y not covered by x v y.
    std::optional<std::pair<Element, Element>> witness;
  };

  SemimodularityResult is_semimodular(FiniteLattice const& lattice);

  // x covered by left and right (left < right as labels) with left v right
  // covering both.
  struct CoveringSquare {
    Element bottom;
    Element left;
    Element right;
    Element top;

    bool operator==(CoveringSquare const&) const = default;
  };

  //! Every pair of distinct upper covers of a common element whose join is
  //! a common upper cover of both, in scan order (bottom, left, right).
  std::vector<CoveringSquare> covering_squares(FiniteLattice const& lattice);

  // Number of (x, {y, z}) with y != z both upper covers of x.
  std::size_t join_cover_configurations(FiniteLattice const& lattice);

}  // namespace latcon

#endif  // LATCON_LATTICE_HPP
