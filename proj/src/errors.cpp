#include "latcon/errors.hpp"

#include <sstream>
#include <utility>

namespace latcon {

  namespace {
    std::string join_elements(std::vector<Element> const& elements, char const* sep) {
      std::ostringstream out;
      for (std::size_t i = 0; i < elements.size(); ++i) {
        if (i != 0) {
          out << sep;
        }
        out << elements[i];
      }
      return out.str();
    }
  }  // namespace

  CycleDetected::CycleDetected(std::vector<Element> cycle)
      : Error("cycle detected: " + join_elements(cycle, " -> ") + " -> "
              + (cycle.empty() ? std::string() : std::to_string(cycle.front()))),
        _cycle(std::move(cycle)) {}

  std::string to_string(LatticeFailure reason) {
    switch (reason) {
      case LatticeFailure::no_upper_bound:
        return "no upper bound";
      case LatticeFailure::no_least_upper_bound:
        return "no least among minimal upper bounds";
      case LatticeFailure::no_lower_bound:
        return "no lower bound";
      case LatticeFailure::no_greatest_lower_bound:
        return "no greatest among maximal lower bounds";
    }
    return "unknown";
  }

  NotALattice::NotALattice(Element x, Element y, LatticeFailure reason)
      : Error("not a lattice: elements " + std::to_string(x) + " and " + std::to_string(y)
              + " have " + to_string(reason)),
        _x(x),
        _y(y),
        _reason(reason) {}

  NotReduced::NotReduced(Element x, Element y)
      : Error("cover pair (" + std::to_string(x) + ", " + std::to_string(y)
              + ") is implied by the other pairs"),
        _x(x),
        _y(y) {}

  NotComparable::NotComparable(Element a, Element b)
      : Error("elements " + std::to_string(a) + " and " + std::to_string(b)
              + " do not satisfy " + std::to_string(a) + " <= " + std::to_string(b)),
        _a(a),
        _b(b) {}

  NotEquivalence::NotEquivalence(std::string axiom, std::vector<Element> elements)
      : Error("not an equivalence: " + axiom + " fails at (" + join_elements(elements, ", ")
              + ")"),
        _axiom(std::move(axiom)),
        _elements(std::move(elements)) {}

  NotReflexive::NotReflexive(Element x)
      : Error("relation is not reflexive at " + std::to_string(x)), _x(x) {}

  NotIntervalBlocks::NotIntervalBlocks(std::size_t block, Element witness)
      : Error("block " + std::to_string(block) + " is not an interval: element "
              + std::to_string(witness) + " lies between its meet and join but outside it"),
        _block(block),
        _witness(witness) {}

  TooLarge::TooLarge(std::size_t n, std::size_t limit)
      : Error("size " + std::to_string(n) + " exceeds the limit " + std::to_string(limit)),
        _n(n),
        _limit(limit) {}

  ParseError::ParseError(std::size_t line, std::string const& what)
      : Error("line " + std::to_string(line) + ": " + what), _line(line) {}

}  // namespace latcon
