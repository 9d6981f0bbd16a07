#include "latcon/congruence.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <tuple>

#include "latcon/kernels.hpp"

namespace latcon {

  std::string to_string(Outcome outcome) {
    return outcome == Outcome::congruence ? "congruence" : "violation";
  }

  std::string to_string(ViolationKind kind) {
    switch (kind) {
      case ViolationKind::join_substitution:
        return "JoinSubstitution";
      case ViolationKind::meet_substitution:
        return "MeetSubstitution";
      case ViolationKind::classical_i:
        return "ClassicalI";
      case ViolationKind::classical_ii:
        return "ClassicalII";
      case ViolationKind::classical_iii:
        return "ClassicalIII";
      case ViolationKind::cover_join:
        return "CoverJoin";
      case ViolationKind::cover_meet:
        return "CoverMeet";
    }
    return "unknown";
  }

  std::string to_string(Side side) {
    return side == Side::join ? "join" : "meet";
  }

  namespace {
    void require_same_size(FiniteLattice const& lattice, std::size_t n) {
      if (n != lattice.size()) {
        throw InvalidInput("relation has " + std::to_string(n) + " elements, lattice has "
                           + std::to_string(lattice.size()));
      }
    }

    CongruenceVerdict violation(ViolationKind        kind,
                                std::vector<Element> elements,
                                std::uint64_t        checks,
                                std::optional<Side>  side = std::nullopt) {
      return {Outcome::violation, Witness{kind, std::move(elements), side}, checks};
    }

    template <typename Op>
    std::optional<CongruenceVerdict> scan_cover_side(FiniteLattice const& lattice,
                                                     SetPartition const&  p,
                                                     bool                 upper,
                                                     ViolationKind        kind,
                                                     Op                   op,
                                                     std::uint64_t&       checks) {
      for (Element x = 0; x < lattice.size(); ++x) {
        auto const covers = upper ? lattice.upper_covers(x) : lattice.lower_covers(x);
        for (std::size_t i = 0; i < covers.size(); ++i) {
          for (std::size_t j = i + 1; j < covers.size(); ++j) {
            ++checks;
            Element const a = covers[i];
            Element const b = covers[j];
            Element const w = op(a, b);
            if (p.same_block(x, a) && !p.same_block(b, w)) {
              return violation(kind, {x, a, b}, checks);
            }
            if (p.same_block(x, b) && !p.same_block(a, w)) {
              return violation(kind, {x, b, a}, checks);
            }
          }
        }
      }
      return std::nullopt;
    }

    bool in_range(FiniteLattice const& lattice, Witness const& w, std::size_t arity) {
      if (w.elements.size() != arity) {
        return false;
      }
      return std::all_of(w.elements.begin(), w.elements.end(), [&](Element e) {
        return e < lattice.size();
      });
    }
  }  // namespace

  CongruenceVerdict check_naive(FiniteLattice const& lattice, SetPartition const& p) {
    require_same_size(lattice, p.size());
    std::size_t const n      = lattice.size();
    std::uint64_t     checks = 0;
    for (Element x = 0; x < n; ++x) {
      for (Element y : p.block(p.block_of(x))) {
        for (Element t = 0; t < n; ++t) {
          ++checks;
          if (!p.same_block(lattice.join(x, t), lattice.join(y, t))) {
            return violation(ViolationKind::join_substitution, {x, y, t}, checks);
          }
          ++checks;
          if (!p.same_block(lattice.meet(x, t), lattice.meet(y, t))) {
            return violation(ViolationKind::meet_substitution, {x, y, t}, checks);
          }
        }
      }
    }
    return {Outcome::congruence, std::nullopt, checks};
  }

  CongruenceVerdict check_classical(FiniteLattice const& lattice, BinaryRelation const& r) {
    require_same_size(lattice, r.size());
    std::size_t const n = lattice.size();
    for (Element x = 0; x < n; ++x) {
      if (!r.contains(x, x)) {
        throw NotReflexive(x);
      }
    }
    std::uint64_t checks = 0;
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        ++checks;
        if (r.contains(x, y) != r.contains(lattice.meet(x, y), lattice.join(x, y))) {
          return violation(ViolationKind::classical_i, {x, y}, checks);
        }
      }
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (!lattice.leq(x, y)) {
          continue;
        }
        for (Element z = 0; z < n; ++z) {
          if (!lattice.leq(y, z)) {
            continue;
          }
          ++checks;
          if (r.contains(x, y) && r.contains(y, z) && !r.contains(x, z)) {
            return violation(ViolationKind::classical_ii, {x, y, z}, checks);
          }
        }
      }
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (!lattice.leq(x, y) || !r.contains(x, y)) {
          continue;
        }
        for (Element t = 0; t < n; ++t) {
          ++checks;
          if (!r.contains(lattice.join(x, t), lattice.join(y, t))) {
            return violation(ViolationKind::classical_iii, {x, y, t}, checks, Side::join);
          }
          ++checks;
          if (!r.contains(lattice.meet(x, t), lattice.meet(y, t))) {
            return violation(ViolationKind::classical_iii, {x, y, t}, checks, Side::meet);
          }
        }
      }
    }

    SetPartition p = SetPartition::discrete(n);
    try {
      p = partition_of(r);
    } catch (NotEquivalence const& e) {
      throw AgreementFailure(std::string("relation passed the classical conditions but ")
                             + e.what());
    }
    if (!check_naive(lattice, p).is_congruence()) {
      throw AgreementFailure("relation passed the classical conditions but fails substitution");
    }
    return {Outcome::congruence, std::nullopt, checks};
  }

  CongruenceVerdict check_covers(FiniteLattice const& lattice, IntervalPartition const& ip) {
    require_same_size(lattice, ip.size());
    auto const&   p      = ip.partition();
    std::uint64_t checks = 0;
    auto          join   = [&](Element a, Element b) { return lattice.join(a, b); };
    auto          meet   = [&](Element a, Element b) { return lattice.meet(a, b); };
    if (auto v = scan_cover_side(lattice, p, true, ViolationKind::cover_join, join, checks)) {
      return *v;
    }
    if (auto v = scan_cover_side(lattice, p, false, ViolationKind::cover_meet, meet, checks)) {
      return *v;
    }
    return {Outcome::congruence, std::nullopt, checks};
  }

  bool witness_reproduces(FiniteLattice const& lattice, SetPartition const& p, Witness const& w) {
    switch (w.kind) {
      case ViolationKind::join_substitution:
      case ViolationKind::meet_substitution: {
        if (!in_range(lattice, w, 3)) {
          return false;
        }
        auto const [x, y, t] = std::tuple(w.elements[0], w.elements[1], w.elements[2]);
        if (!p.same_block(x, y)) {
          return false;
        }
        return w.kind == ViolationKind::join_substitution
                   ? !p.same_block(lattice.join(x, t), lattice.join(y, t))
                   : !p.same_block(lattice.meet(x, t), lattice.meet(y, t));
      }
      case ViolationKind::cover_join:
      case ViolationKind::cover_meet: {
        if (!in_range(lattice, w, 3)) {
          return false;
        }
        auto const [x, y, z] = std::tuple(w.elements[0], w.elements[1], w.elements[2]);
        if (y == z) {
          return false;
        }
        if (w.kind == ViolationKind::cover_join) {
          return lattice.is_cover(x, y) && lattice.is_cover(x, z) && p.same_block(x, y)
                 && !p.same_block(z, lattice.join(y, z));
        }
        return lattice.is_cover(y, x) && lattice.is_cover(z, x) && p.same_block(x, y)
               && !p.same_block(z, lattice.meet(y, z));
      }
      default:
        return witness_reproduces(lattice, relation_of(p), w);
    }
  }

  bool witness_reproduces(FiniteLattice const& lattice, BinaryRelation const& r, Witness const& w) {
    switch (w.kind) {
      case ViolationKind::classical_i: {
        if (!in_range(lattice, w, 2)) {
          return false;
        }
        auto const x = w.elements[0], y = w.elements[1];
        return r.contains(x, y) != r.contains(lattice.meet(x, y), lattice.join(x, y));
      }
      case ViolationKind::classical_ii: {
        if (!in_range(lattice, w, 3)) {
          return false;
        }
        auto const x = w.elements[0], y = w.elements[1], z = w.elements[2];
        return lattice.leq(x, y) && lattice.leq(y, z) && r.contains(x, y) && r.contains(y, z)
               && !r.contains(x, z);
      }
      case ViolationKind::classical_iii: {
        if (!in_range(lattice, w, 3) || !w.side) {
          return false;
        }
        auto const x = w.elements[0], y = w.elements[1], t = w.elements[2];
        if (!lattice.leq(x, y) || !r.contains(x, y)) {
          return false;
        }
        return *w.side == Side::join ? !r.contains(lattice.join(x, t), lattice.join(y, t))
                                     : !r.contains(lattice.meet(x, t), lattice.meet(y, t));
      }
      default:
        // Partition-based kinds need an equivalence.
        if (!is_equivalence(r)) {
          return false;
        }
        return witness_reproduces(lattice, partition_of(r), w);
    }
  }

  SetPartition principal_congruence(FiniteLattice const& lattice, Element a, Element b) {
    std::size_t const          n = lattice.size();
    std::vector<std::uint32_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](std::uint32_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };
    auto unite = [&](std::uint32_t x, std::uint32_t y) {
      x = find(x);
      y = find(y);
      if (x == y) {
        return false;
      }
      parent[std::max(x, y)] = std::min(x, y);
      return true;
    };

    unite(a, b);
    // At a fixpoint every x is compatible with its root, hence any two
    // elements with a common root are compatible with each other.
    bool changed = true;
    while (changed) {
      changed = false;
      for (Element x = 0; x < n; ++x) {
        Element const root = find(x);
        if (root == x) {
          continue;
        }
        for (Element t = 0; t < n; ++t) {
          changed |= unite(lattice.join(x, t), lattice.join(root, t));
          changed |= unite(lattice.meet(x, t), lattice.meet(root, t));
        }
      }
    }
    std::vector<std::uint32_t> labels(n);
    for (Element x = 0; x < n; ++x) {
      labels[x] = find(x);
    }
    return SetPartition::from_labels(labels);
  }

  void normalize_congruence_order(std::vector<SetPartition>& partitions) {
    std::sort(partitions.begin(), partitions.end(), [](auto const& p, auto const& q) {
      if (p.block_count() != q.block_count()) {
        return p.block_count() > q.block_count();
      }
      return p < q;
    });
    partitions.erase(std::unique(partitions.begin(), partitions.end()), partitions.end());
  }

  ConLattice::ConLattice(std::vector<SetPartition> congruences)
      : _congruences(std::move(congruences)) {
    normalize_congruence_order(_congruences);
    std::size_t const m     = _congruences.size();
    std::size_t const words = (m + 63) / 64;
    _leq.assign(m * m, 0);
    std::vector<std::uint64_t> above(m * words, 0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (partition_leq(_congruences[i], _congruences[j])) {
          _leq[i * m + j] = 1;
          if (i != j) {
            above[i * words + j / 64] |= std::uint64_t(1) << (j % 64);
          }
        }
      }
    }
    _lower.assign(m, {});
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<std::uint64_t> below(words, 0);
      for (std::size_t j = 0; j < m; ++j) {
        if (j != i && _leq[j * m + i]) {
          below[j / 64] |= std::uint64_t(1) << (j % 64);
        }
      }
      for (std::size_t j = 0; j < m; ++j) {
        if (!((below[j / 64] >> (j % 64)) & 1)) {
          continue;
        }
        bool between = false;
        for (std::size_t w = 0; w < words && !between; ++w) {
          between = (above[j * words + w] & below[w]) != 0;
        }
        if (!between) {
          _lower[i].push_back(j);
        }
      }
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> ConLattice::refinement_edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j : _lower[i]) {
        edges.emplace_back(j, i);
      }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
  }

  std::optional<std::size_t> ConLattice::find(SetPartition const& p) const {
    auto it = std::find(_congruences.begin(), _congruences.end(), p);
    if (it == _congruences.end()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - _congruences.begin());
  }

  std::vector<SetPartition> generated_congruences(FiniteLattice const& lattice) {
    std::set<SetPartition>    known;
    std::vector<SetPartition> result;
    auto add = [&](SetPartition p) {
      if (known.insert(p).second) {
        result.push_back(std::move(p));
      }
    };
    add(SetPartition::discrete(lattice.size()));
    for (auto [x, y] : lattice.covers()) {
      add(principal_congruence(lattice, x, y));
    }
    for (std::size_t i = 0; i < result.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        add(partition_join(result[i], result[j]));
      }
    }
    normalize_congruence_order(result);
    return result;
  }

  ConLattice all_congruences(FiniteLattice const& lattice, ConAlgorithm algorithm, std::size_t max_n) {
    switch (algorithm) {
      case ConAlgorithm::brute:
        return ConLattice(parallel::brute_force_congruences(lattice, max_n));
      case ConAlgorithm::generated:
        return ConLattice(generated_congruences(lattice));
      case ConAlgorithm::both:
        break;
    }
    auto brute     = parallel::brute_force_congruences(lattice, max_n);
    auto generated = generated_congruences(lattice);
    if (brute != generated) {
      throw AgreementFailure("brute-force and generated congruence sets differ ("
                             + std::to_string(brute.size()) + " vs "
                             + std::to_string(generated.size()) + ")");
    }
    return ConLattice(std::move(generated));
  }

  std::vector<std::size_t> join_irreducibles(ConLattice const& con) {
    std::vector<std::size_t> result;
    for (std::size_t i = 0; i < con.size(); ++i) {
      if (con.is_join_irreducible(i)) {
        result.push_back(i);
      }
    }
    return result;
  }

  ConfigurationCounts count_configurations(FiniteLattice const& lattice, IntervalPartition const& ip) {
    require_same_size(lattice, ip.size());
    ConfigurationCounts counts;
    auto pairs = [](std::size_t k) -> std::uint64_t { return k < 2 ? 0 : k * (k - 1) / 2; };
    for (Element x = 0; x < lattice.size(); ++x) {
      counts.covers_count += pairs(lattice.upper_covers(x).size());
      counts.covers_count += pairs(lattice.lower_covers(x).size());
    }
    std::uint64_t related = 0;
    for (auto const& block : ip.partition().blocks()) {
      related += static_cast<std::uint64_t>(block.size()) * block.size();
    }
    counts.naive_count = 2 * related * lattice.size();
    return counts;
  }

}  // namespace latcon
