#ifndef LATCON_ERRORS_HPP
#define LATCON_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace latcon {

  using Element = std::uint32_t;

  // Base for every recoverable input/validation failure raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class InvalidInput : public Error {
   public:
    using Error::Error;
  };

  class CycleDetected : public Error {
   public:
    explicit CycleDetected(std::vector<Element> cycle);
    // Closed walk x0 -> x1 -> ... -> x0 along supplied cover pairs; the
    // first element is not repeated at the end.
    std::vector<Element> const& cycle() const noexcept {
      return _cycle;
    }

   private:
    std::vector<Element> _cycle;
  };

  enum class LatticeFailure {
    no_upper_bound,
    no_least_upper_bound,
    no_lower_bound,
    no_greatest_lower_bound
  };

  std::string to_string(LatticeFailure reason);

  class NotALattice : public Error {
   public:
    NotALattice(Element x, Element y, LatticeFailure reason);
    Element x() const noexcept {
      return _x;
    }
    Element y() const noexcept {
      return _y;
    }
    LatticeFailure reason() const noexcept {
      return _reason;
    }

   private:
    Element        _x;
    Element        _y;
    LatticeFailure _reason;
  };

  class NotReduced : public Error {
   public:
    NotReduced(Element x, Element y);
    Element x() const noexcept {
      return _x;
    }
    Element y() const noexcept {
      return _y;
    }

   private:
    Element _x;
    Element _y;
  };

  class NotComparable : public Error {
   public:
    NotComparable(Element a, Element b);
    Element a() const noexcept {
      return _a;
    }
    Element b() const noexcept {
      return _b;
    }

   private:
    Element _a;
    Element _b;
  };

  class BadPartition : public Error {
   public:
    using Error::Error;
  };

  class NotEquivalence : public Error {
   public:
    // axiom is one of "reflexivity", "symmetry", "transitivity".
    NotEquivalence(std::string axiom, std::vector<Element> elements);
    std::string const& axiom() const noexcept {
      return _axiom;
    }
    std::vector<Element> const& elements() const noexcept {
      return _elements;
    }

   private:
    std::string          _axiom;
    std::vector<Element> _elements;
  };

  class NotReflexive : public Error {
   public:
    explicit NotReflexive(Element x);
    Element x() const noexcept {
      return _x;
    }

   private:
    Element _x;
  };

  // The interval-block hypothesis failed: `witness` lies in
  // [meet(block), join(block)] but not in the block.
  class NotIntervalBlocks : public Error {
   public:
    NotIntervalBlocks(std::size_t block, Element witness);
    std::size_t block() const noexcept {
      return _block;
    }
    Element witness() const noexcept {
      return _witness;
    }

   private:
    std::size_t _block;
    Element     _witness;
  };

  class TooLarge : public Error {
   public:
    TooLarge(std::size_t n, std::size_t limit);
    std::size_t n() const noexcept {
      return _n;
    }
    std::size_t limit() const noexcept {
      return _limit;
    }

   private:
    std::size_t _n;
    std::size_t _limit;
  };

  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::string const& what);
    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

  // Two routes that must agree by theorem did not. Never expected; raised
  // instead of aborting so callers can report it.
  class AgreementFailure : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

}  // namespace latcon

#endif  // LATCON_ERRORS_HPP
