#ifndef LATCON_KERNELS_HPP
#define LATCON_KERNELS_HPP

// Exhaustive enumeration kernels. Each has a serial reference in
// latcon::serial and an OpenMP version in latcon::parallel with identical
// results (same members, same normalized order). Without OpenMP the
// parallel versions run on one thread.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "latcon/lattice.hpp"
#include "latcon/relations.hpp"

namespace latcon {

  //! Outcome of running every checker against every partition of a carrier.
  struct SweepStats {
    std::uint64_t partitions          = 0;
    std::uint64_t interval_partitions = 0;
    std::uint64_t congruences         = 0;
    // check_covers vs check_naive on certified partitions.
    std::uint64_t disagreements = 0;
    // check_covers on the lattice vs on its dual.
    std::uint64_t dual_disagreements = 0;
    // Restricted-growth strings of the offending partitions, ascending.
    std::vector<std::vector<std::uint32_t>> disagreeing;

    bool operator==(SweepStats const&) const = default;
  };

  namespace serial {
    // Throws TooLarge when lattice.size() > max_n.
    std::vector<SetPartition> brute_force_congruences(FiniteLattice const& lattice, std::size_t max_n);

    SweepStats sweep_interval_partitions(FiniteLattice const& lattice, std::size_t max_n);
  }  // namespace serial

  namespace parallel {
    std::vector<SetPartition> brute_force_congruences(FiniteLattice const& lattice, std::size_t max_n);

    SweepStats sweep_interval_partitions(FiniteLattice const& lattice, std::size_t max_n);

    // omp_get_max_threads(), or 1 without OpenMP.
    int max_threads();
  }  // namespace parallel

}  // namespace latcon

#endif  // LATCON_KERNELS_HPP
