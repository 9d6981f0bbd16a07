#include "latcon/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

namespace latcon::io {

  namespace {

    using json = nlohmann::json;

    bool is_json(std::string_view contents) {
      auto pos = contents.find_first_not_of(" \t\r\n");
      return pos != std::string_view::npos && (contents[pos] == '{' || contents[pos] == '[');
    }

    // Non-blank, comment-stripped lines with their 1-based line numbers.
    std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> numeric_lines(
        std::string_view contents) {
      std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> out;
      std::size_t                                                     line_no = 0;
      while (!contents.empty()) {
        ++line_no;
        auto             eol  = contents.find('\n');
        std::string_view line = contents.substr(0, eol);
        contents.remove_prefix(eol == std::string_view::npos ? contents.size() : eol + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
          line = line.substr(0, hash);
        }
        std::vector<std::uint64_t> values;
        std::size_t                i = 0;
        while (i < line.size()) {
          if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
          }
          std::uint64_t value = 0;
          auto [ptr, ec]      = std::from_chars(line.data() + i, line.data() + line.size(), value);
          if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t'
                                    && *ptr != '\r')) {
            throw ParseError(line_no, "expected a non-negative integer");
          }
          if (value > 0xffffffffu) {
            throw ParseError(line_no, "integer out of range");
          }
          values.push_back(value);
          i = static_cast<std::size_t>(ptr - line.data());
        }
        if (!values.empty()) {
          out.emplace_back(line_no, std::move(values));
        }
      }
      return out;
    }

    json parse_json(std::string_view contents) {
      try {
        return json::parse(contents);
      } catch (json::parse_error const& e) {
        throw ParseError(0, e.what());
      }
    }

    Element json_element(json const& value) {
      if (!value.is_number_unsigned() || value.get<std::uint64_t>() > 0xffffffffu) {
        throw ParseError(0, "expected a non-negative integer, got " + value.dump());
      }
      return value.get<Element>();
    }

    constexpr std::array<char const*, 12> palette = {"#8dd3c7",
                                                     "#ffffb3",
                                                     "#bebada",
                                                     "#fb8072",
                                                     "#80b1d3",
                                                     "#fdb462",
                                                     "#b3de69",
                                                     "#fccde5",
                                                     "#d9d9d9",
                                                     "#bc80bd",
                                                     "#ccebc5",
                                                     "#ffed6f"};

    std::string block_label(std::vector<Element> const& block) {
      std::string out;
      for (std::size_t i = 0; i < block.size(); ++i) {
        out += (i ? " " : "") + std::to_string(block[i]);
      }
      return out;
    }

  }  // namespace

  FiniteLattice parse_lattice(std::string_view contents) {
    if (is_json(contents)) {
      json const doc = parse_json(contents);
      if (!doc.is_object() || !doc.contains("size") || !doc.contains("covers")
          || !doc["covers"].is_array()) {
        throw ParseError(0, "lattice JSON needs \"size\" and an array \"covers\"");
      }
      std::size_t const      n = json_element(doc["size"]);
      std::vector<CoverPair> covers;
      for (auto const& pair : doc["covers"]) {
        if (!pair.is_array() || pair.size() != 2) {
          throw ParseError(0, "each cover must be a 2-element array");
        }
        covers.emplace_back(json_element(pair[0]), json_element(pair[1]));
      }
      return build_from_covers(n, covers);
    }
    auto const lines = numeric_lines(contents);
    if (lines.empty()) {
      throw ParseError(1, "missing element count");
    }
    if (lines.front().second.size() != 1) {
      throw ParseError(lines.front().first, "first line must hold only the element count");
    }
    std::vector<CoverPair> covers;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      auto const& [line_no, values] = lines[i];
      if (values.size() != 2) {
        throw ParseError(line_no, "expected a cover pair \"x y\"");
      }
      covers.emplace_back(static_cast<Element>(values[0]), static_cast<Element>(values[1]));
    }
    return build_from_covers(lines.front().second.front(), covers);
  }

  std::string format_lattice(FiniteLattice const& lattice, Format format) {
    if (format == Format::json) {
      json covers = json::array();
      for (auto [x, y] : lattice.covers()) {
        covers.push_back({x, y});
      }
      return json{{"size", lattice.size()}, {"covers", covers}}.dump() + "\n";
    }
    std::string out = std::to_string(lattice.size()) + "\n";
    for (auto [x, y] : lattice.covers()) {
      out += std::to_string(x) + " " + std::to_string(y) + "\n";
    }
    return out;
  }

  std::vector<std::vector<Element>> parse_blocks(std::string_view contents) {
    std::vector<std::vector<Element>> blocks;
    if (is_json(contents)) {
      json const doc = parse_json(contents);
      if (!doc.is_array()) {
        throw ParseError(0, "partition JSON must be an array of arrays");
      }
      for (auto const& block : doc) {
        if (!block.is_array()) {
          throw ParseError(0, "partition JSON must be an array of arrays");
        }
        auto& out = blocks.emplace_back();
        for (auto const& e : block) {
          out.push_back(json_element(e));
        }
      }
      return blocks;
    }
    for (auto& [line_no, values] : numeric_lines(contents)) {
      (void) line_no;
      blocks.emplace_back(values.begin(), values.end());
    }
    return blocks;
  }

  SetPartition parse_partition(std::string_view contents, std::size_t n) {
    return partition_from_blocks(n, parse_blocks(contents));
  }

  std::string format_partition(SetPartition const& p, Format format) {
    if (format == Format::json) {
      return to_json(p).dump() + "\n";
    }
    std::string out;
    for (auto const& block : p.blocks()) {
      out += block_label(block) + "\n";
    }
    return out;
  }

  std::string read_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InvalidInput("cannot read " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

  std::string digest(std::string_view bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int                               length = 0;
    EVP_Digest(bytes.data(), bytes.size(), md.data(), &length, EVP_sha256(), nullptr);
    std::ostringstream out;
    for (unsigned int i = 0; i < length; ++i) {
      out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    }
    return out.str();
  }

  json to_json(Witness const& w) {
    json out{{"kind", to_string(w.kind)}, {"elements", w.elements}};
    if (w.side) {
      out["side"] = to_string(*w.side);
    }
    return out;
  }

  json to_json(CongruenceVerdict const& v) {
    return json{{"outcome", to_string(v.outcome)},
                {"witness", v.witness ? to_json(*v.witness) : json(nullptr)},
                {"checks_performed", v.checks_performed}};
  }

  json to_json(SetPartition const& p) {
    json out = json::array();
    for (auto const& block : p.blocks()) {
      out.push_back(block);
    }
    return out;
  }

  json to_json(ConLattice const& con) {
    json congruences = json::array();
    json irreducible = json::array();
    for (std::size_t i = 0; i < con.size(); ++i) {
      congruences.push_back(to_json(con[i]));
      if (con.is_join_irreducible(i)) {
        irreducible.push_back(i);
      }
    }
    json edges = json::array();
    for (auto [lo, hi] : con.refinement_edges()) {
      edges.push_back({lo, hi});
    }
    return json{{"congruences", congruences},
                {"refinement_edges", edges},
                {"join_irreducible", irreducible}};
  }

  std::string block_colour(std::size_t b) {
    return palette[b % palette.size()];
  }

  std::string hasse_dot(FiniteLattice const& lattice, SetPartition const* p) {
    std::string out = "digraph lattice {\n  rankdir=BT;\n";
    if (p != nullptr) {
      out += "  node [style=filled];\n";
    }
    for (Element x = 0; x < lattice.size(); ++x) {
      out += "  " + std::to_string(x);
      if (p != nullptr) {
        out += " [fillcolor=\"" + block_colour(p->block_of(x)) + "\"]";
      }
      out += ";\n";
    }
    for (auto [x, y] : lattice.covers()) {
      out += "  " + std::to_string(x) + " -> " + std::to_string(y) + ";\n";
    }
    return out + "}\n";
  }

  std::string con_dot(ConLattice const& con) {
    std::string out = "digraph congruences {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < con.size(); ++i) {
      std::string label;
      for (auto const& block : con[i].blocks()) {
        if (block.size() > 1) {
          label += (label.empty() ? "" : " | ") + block_label(block);
        }
      }
      if (label.empty()) {
        label = "discrete";
      }
      out += "  c" + std::to_string(i) + " [label=\"" + label + "\"";
      if (con.is_join_irreducible(i)) {
        out += ", peripheries=2";
      }
      out += "];\n";
    }
    for (auto [lo, hi] : con.refinement_edges()) {
      out += "  c" + std::to_string(lo) + " -> c" + std::to_string(hi) + ";\n";
    }
    return out + "}\n";
  }

}  // namespace latcon::io
