#ifndef LATCON_CONGRUENCE_HPP
#define LATCON_CONGRUENCE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latcon/lattice.hpp"
#include "latcon/relations.hpp"

namespace latcon {

  enum class Outcome { congruence, violation };

  enum class ViolationKind {
    join_substitution,  // (x, y, t)
    meet_substitution,  // (x, y, t)
    classical_i,        // (x, y)
    classical_ii,       // (x, y, z)
    classical_iii,      // (x, y, t) plus side
    cover_join,         // (x, y, z)
    cover_meet          // (x, y, z)
  };

  enum class Side { join, meet };

  std::string to_string(Outcome outcome);
  std::string to_string(ViolationKind kind);
  std::string to_string(Side side);

  struct Witness {
    ViolationKind        kind;
    std::vector<Element> elements;
    std::optional<Side>  side;  // classical_iii only

    bool operator==(Witness const&) const = default;
  };

  //! Result of one of the congruence checkers.
  //!
  //! checks_performed counts visited instances of the checked condition
  //! up to and including the first violation:
  //!  - check_naive: one per (x, y, t, operation) with x, y in a common block
  //!    (including x == y);
  //!  - check_classical: one per pair for (i), one per chain x <= y <= z for
  //!    (ii), one per (x, y, t, operation) with x <= y related for (iii);
  //!  - check_covers: one per (x, {y, z}) with y != z both upper (or both
  //!    lower) covers of x.
  struct CongruenceVerdict {
    Outcome                outcome = Outcome::congruence;
    std::optional<Witness> witness;
    std::uint64_t          checks_performed = 0;

    bool is_congruence() const noexcept {
      return outcome == Outcome::congruence;
    }
  };

  //! The substitution property itself: every x, y in a common block and every
  //! t have x v t, y v t in a common block and x ^ t, y ^ t in a common block.
  //! Scans (x, y, t) lexicographically, join before meet, and returns the
  //! first violation.
  CongruenceVerdict check_naive(FiniteLattice const& lattice, SetPartition const& p);

  //! The classical three-condition test on a reflexive relation:
  //!  (i)   r(x, y) iff r(x ^ y, x v y);
  //!  (ii)  x <= y <= z, r(x, y) and r(y, z) imply r(x, z);
  //!  (iii) x <= y and r(x, y) imply r(x v t, y v t) and r(x ^ t, y ^ t).
  //! Conditions are scanned in that order. A passing result is cross-checked
  //! against check_naive on the induced partition; a mismatch throws
  //! AgreementFailure. Throws NotReflexive if r is not reflexive.
  CongruenceVerdict check_classical(FiniteLattice const& lattice, BinaryRelation const& r);

  //! The cover-level test for a partition with interval blocks: for every x,
  //! every pair of distinct upper covers y, z of x with x equivalent to y must
  //! have z equivalent to y v z, and dually for lower covers with y ^ z.
  //!
  //! All join-side configurations are scanned before the meet side; for each
  //! x the unordered pairs {y, z} are scanned by ascending labels and both
  //! orientations are tried, (y, z) before (z, y).
  CongruenceVerdict check_covers(FiniteLattice const& lattice, IntervalPartition const& ip);

  //! Re-evaluates the named condition on the witness elements; true iff the
  //! condition fails there. Classical kinds are evaluated on relation_of(p).
  bool witness_reproduces(FiniteLattice const& lattice, SetPartition const& p, Witness const& w);
  bool witness_reproduces(FiniteLattice const& lattice, BinaryRelation const& r, Witness const& w);

  // Least congruence collapsing a and b.
  SetPartition principal_congruence(FiniteLattice const& lattice, Element a, Element b);

  //! All congruences of a lattice ordered by refinement.
  //!
  //! Members are kept in a normalized order (fewer collapses first: more
  //! blocks first, ties broken by the restricted-growth string), so the
  //! discrete partition is always first and the full one last.
  class ConLattice {
   public:
    explicit ConLattice(std::vector<SetPartition> congruences);

    std::size_t size() const noexcept {
      return _congruences.size();
    }

    std::vector<SetPartition> const& congruences() const noexcept {
      return _congruences;
    }

    SetPartition const& operator[](std::size_t i) const {
      return _congruences[i];
    }

    bool leq(std::size_t i, std::size_t j) const noexcept {
      return _leq[i * size() + j] != 0;
    }

    std::vector<std::size_t> const& lower_covers(std::size_t i) const {
      return _lower[i];
    }

    bool is_join_irreducible(std::size_t i) const {
      return _lower[i].size() == 1;
    }

    // Hasse diagram of the refinement order as (finer, coarser) index pairs.
    std::vector<std::pair<std::size_t, std::size_t>> refinement_edges() const;

    std::optional<std::size_t> find(SetPartition const& p) const;

   private:
    std::vector<SetPartition>             _congruences;
    std::vector<std::uint8_t>             _leq;
    std::vector<std::vector<std::size_t>> _lower;
  };

  // Sorts into ConLattice's normalized order and removes duplicates.
  void normalize_congruence_order(std::vector<SetPartition>& partitions);

  enum class ConAlgorithm { brute, generated, both };

  inline constexpr std::size_t default_brute_force_limit = 10;

  //! Every congruence of `lattice`.
  //!
  //! brute: exhaustive search over all partitions (restricted-growth strings,
  //! abandoning a prefix only once it already contains a violated
  //! substitution instance); throws TooLarge when size() > max_n.
  //! generated: principal congruences of all covers closed under join, plus
  //! the discrete partition.
  //! both: runs the two and throws AgreementFailure if they differ.
  ConLattice all_congruences(FiniteLattice const& lattice,
                             ConAlgorithm         algorithm = ConAlgorithm::both,
                             std::size_t          max_n     = default_brute_force_limit);

  std::vector<SetPartition> generated_congruences(FiniteLattice const& lattice);

  // Indices into con of the members with exactly one lower cover.
  std::vector<std::size_t> join_irreducibles(ConLattice const& con);

  struct ConfigurationCounts {
    std::uint64_t covers_count = 0;
    std::uint64_t naive_count  = 0;

    double ratio() const noexcept {
      return naive_count == 0 ? 0.0
                              : static_cast<double>(covers_count) / static_cast<double>(naive_count);
    }
  };

  // What check_covers and check_naive would count over a full scan with no
  // early exit.
  ConfigurationCounts count_configurations(FiniteLattice const& lattice, IntervalPartition const& ip);

}  // namespace latcon

#endif  // LATCON_CONGRUENCE_HPP
