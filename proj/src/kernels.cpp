#include "latcon/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "latcon/congruence.hpp"

namespace latcon {

  namespace {

    // Backtracking over restricted-growth strings. After element k receives
    // its label, every substitution instance (x, y, t, op) whose four
    // elements x, y, op(x, t), op(y, t) are all <= k is decided; a prefix is
    // abandoned iff one of the newly decided instances fails.
    class CongruenceSearch {
     public:
      explicit CongruenceSearch(FiniteLattice const& lattice)
          : _lattice(lattice), _n(lattice.size()), _labels(_n, 0), _preimages(_n) {
        for (Element x = 0; x < _n; ++x) {
          for (Element t = 0; t < _n; ++t) {
            _preimages[lattice.join(x, t)].push_back({x, t, true});
            _preimages[lattice.meet(x, t)].push_back({x, t, false});
          }
        }
      }

      struct Prefix {
        std::vector<std::uint32_t> labels;
        std::uint32_t              next_label;  // 1 + max label so far
      };

      // All consistent prefixes of the given length, lexicographically.
      std::vector<Prefix> prefixes(std::size_t depth) {
        std::vector<Prefix> out;
        collect(0, 0, depth, out);
        return out;
      }

      void complete(Prefix const& prefix, std::vector<SetPartition>& out) {
        std::copy(prefix.labels.begin(), prefix.labels.end(), _labels.begin());
        search(prefix.labels.size(), prefix.next_label, out);
      }

     private:
      struct Preimage {
        Element x;
        Element t;
        bool    is_join;
      };

      Element apply(bool is_join, Element a, Element b) const {
        return is_join ? _lattice.join(a, b) : _lattice.meet(a, b);
      }

      bool consistent(Element k) const {
        std::uint32_t const label = _labels[k];
        for (Element x = 0; x < k; ++x) {
          if (_labels[x] != label) {
            continue;
          }
          for (Element t = 0; t < _n; ++t) {
            for (bool is_join : {true, false}) {
              Element const a = apply(is_join, x, t);
              Element const b = apply(is_join, k, t);
              if (a <= k && b <= k && _labels[a] != _labels[b]) {
                return false;
              }
            }
          }
        }
        for (auto const& [x, t, is_join] : _preimages[k]) {
          if (x >= k) {
            continue;
          }
          for (Element y = 0; y < k; ++y) {
            if (y == x || _labels[y] != _labels[x]) {
              continue;
            }
            Element const b = apply(is_join, y, t);
            if (b <= k && _labels[b] != label) {
              return false;
            }
          }
        }
        return true;
      }

      void collect(std::size_t k, std::uint32_t next_label, std::size_t depth, std::vector<Prefix>& out) {
        if (k == depth) {
          out.push_back({{_labels.begin(), _labels.begin() + k}, next_label});
          return;
        }
        for (std::uint32_t label = 0; label <= next_label; ++label) {
          _labels[k] = label;
          if (consistent(static_cast<Element>(k))) {
            collect(k + 1, std::max(next_label, label + 1), depth, out);
          }
        }
      }

      void search(std::size_t k, std::uint32_t next_label, std::vector<SetPartition>& out) {
        if (k == _n) {
          out.push_back(SetPartition::from_labels(_labels));
          return;
        }
        for (std::uint32_t label = 0; label <= next_label; ++label) {
          _labels[k] = label;
          if (consistent(static_cast<Element>(k))) {
            search(k + 1, std::max(next_label, label + 1), out);
          }
        }
      }

      FiniteLattice const&               _lattice;
      std::size_t                        _n;
      std::vector<std::uint32_t>         _labels;
      std::vector<std::vector<Preimage>> _preimages;
    };

    void require_within(FiniteLattice const& lattice, std::size_t max_n) {
      if (lattice.size() > max_n) {
        throw TooLarge(lattice.size(), max_n);
      }
    }

    struct PartitionFlags {
      bool certified   = false;
      bool congruence  = false;
      bool disagrees   = false;
      bool dual_differ = false;
    };

    PartitionFlags classify(FiniteLattice const&              lattice,
                            FiniteLattice const&              dual,
                            std::vector<std::uint32_t> const& rgs) {
      PartitionFlags flags;
      auto const     p     = SetPartition::from_labels(rgs);
      flags.congruence     = check_naive(lattice, p).is_congruence();
      auto const certified = try_certify_interval_blocks(lattice, p);
      if (certified) {
        flags.certified     = true;
        bool const by_cover = check_covers(lattice, *certified).is_congruence();
        flags.disagrees     = by_cover != flags.congruence;
        flags.dual_differ   = check_covers(dual, *certified).is_congruence() != by_cover;
      }
      return flags;
    }

    SweepStats tally(std::vector<std::vector<std::uint32_t>> const& all,
                     std::vector<PartitionFlags> const&             flags) {
      SweepStats stats;
      stats.partitions = all.size();
      for (std::size_t i = 0; i < all.size(); ++i) {
        stats.interval_partitions += flags[i].certified;
        stats.congruences += flags[i].congruence;
        stats.dual_disagreements += flags[i].dual_differ;
        if (flags[i].disagrees) {
          ++stats.disagreements;
          stats.disagreeing.push_back(all[i]);
        }
      }
      return stats;
    }

  }  // namespace

  namespace serial {
    std::vector<SetPartition> brute_force_congruences(FiniteLattice const& lattice, std::size_t max_n) {
      require_within(lattice, max_n);
      CongruenceSearch          search(lattice);
      std::vector<SetPartition> out;
      search.complete({{}, 0}, out);
      normalize_congruence_order(out);
      return out;
    }

    SweepStats sweep_interval_partitions(FiniteLattice const& lattice, std::size_t max_n) {
      require_within(lattice, max_n);
      auto const                  dual = dual_lattice(lattice);
      auto const                  all  = all_restricted_growth_strings(lattice.size());
      std::vector<PartitionFlags> flags(all.size());
      for (std::size_t i = 0; i < all.size(); ++i) {
        flags[i] = classify(lattice, dual, all[i]);
      }
      return tally(all, flags);
    }
  }  // namespace serial

  namespace parallel {
    int max_threads() {
#ifdef _OPENMP
      return omp_get_max_threads();
#else
      return 1;
#endif
    }

    std::vector<SetPartition> brute_force_congruences(FiniteLattice const& lattice, std::size_t max_n) {
      require_within(lattice, max_n);
      std::size_t const depth    = std::min<std::size_t>(lattice.size(), 6);
      auto const        prefixes = CongruenceSearch(lattice).prefixes(depth);
      std::vector<std::vector<SetPartition>> found(prefixes.size());
      auto const                             count = static_cast<std::ptrdiff_t>(prefixes.size());

#pragma omp parallel
      {
        CongruenceSearch search(lattice);
#pragma omp for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
          search.complete(prefixes[i], found[i]);
        }
      }

      std::vector<SetPartition> out;
      for (auto& part : found) {
        std::move(part.begin(), part.end(), std::back_inserter(out));
      }
      normalize_congruence_order(out);
      return out;
    }

    SweepStats sweep_interval_partitions(FiniteLattice const& lattice, std::size_t max_n) {
      require_within(lattice, max_n);
      auto const                  dual  = dual_lattice(lattice);
      auto const                  all   = all_restricted_growth_strings(lattice.size());
      auto const                  count = static_cast<std::ptrdiff_t>(all.size());
      std::vector<PartitionFlags> flags(all.size());

#pragma omp parallel for schedule(dynamic, 64)
      for (std::ptrdiff_t i = 0; i < count; ++i) {
        flags[i] = classify(lattice, dual, all[i]);
      }
      return tally(all, flags);
    }
  }  // namespace parallel

}  // namespace latcon
