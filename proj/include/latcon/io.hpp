#ifndef LATCON_IO_HPP
#define LATCON_IO_HPP

// File formats.
//
// Lattice, text:   first line n, then one "x y" line per cover x < y.
// Lattice, JSON:   {"size": n, "covers": [[x, y], ...]}
// Partition, text: one block per line, elements separated by spaces.
// Partition, JSON: [[...], [...], ...]
//
// Text formats accept '#' comments and blank lines. Readers detect JSON by
// the first non-blank character. Writers emit covers in stored order and
// blocks in normalized order, so write(read(write(x))) == write(x).

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "latcon/congruence.hpp"
#include "latcon/lattice.hpp"
#include "latcon/relations.hpp"

namespace latcon::io {

  enum class Format { text, json };

  FiniteLattice parse_lattice(std::string_view contents);
  std::string   format_lattice(FiniteLattice const& lattice, Format format = Format::text);

  std::vector<std::vector<Element>> parse_blocks(std::string_view contents);
  SetPartition parse_partition(std::string_view contents, std::size_t n);
  std::string  format_partition(SetPartition const& p, Format format = Format::text);

  // Throws InvalidInput if the file cannot be read.
  std::string read_file(std::filesystem::path const& path);

  // Hex SHA-256 of the bytes.
  std::string digest(std::string_view bytes);

  nlohmann::json to_json(Witness const& w);
  nlohmann::json to_json(CongruenceVerdict const& v);
  nlohmann::json to_json(SetPartition const& p);
  nlohmann::json to_json(ConLattice const& con);

  // Hasse diagram drawn bottom to top. With a partition, nodes are filled
  // with a colour chosen by normalized block id.
  std::string hasse_dot(FiniteLattice const& lattice, SetPartition const* p = nullptr);

  // Refinement order of Con(L), finest at the bottom.
  std::string con_dot(ConLattice const& con);

  // Colour used for block id b in hasse_dot.
  std::string block_colour(std::size_t b);

}  // namespace latcon::io

#endif  // LATCON_IO_HPP
