#include "cli.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "latcon/catalog.hpp"
#include "latcon/congruence.hpp"
#include "latcon/io.hpp"
#include "latcon/lattice.hpp"
#include "latcon/relations.hpp"

namespace latcon::cli {

  namespace {

    using json = nlohmann::json;

    struct Options {
      std::string              lattice_path;
      std::string              partition_path;
      std::string              method    = "all";
      std::string              algorithm = "both";
      std::string              dot_path;
      std::size_t              max_n = default_brute_force_limit;
      bool                     json  = false;
      bool                     dual  = false;
      std::vector<std::string> gen_args;
    };

    struct Report {
      std::string              command;
      std::vector<std::string> args;
      json                     inputs   = json::array();
      json                     result   = json::object();
      json                     counters = json::object();
      std::vector<std::string> text;
      int                      exit_code = exit_pass;
    };

    std::string verdict_text(CongruenceVerdict const& v) {
      std::ostringstream out;
      out << to_string(v.outcome);
      if (v.witness) {
        out << " " << to_string(v.witness->kind) << "(";
        for (std::size_t i = 0; i < v.witness->elements.size(); ++i) {
          out << (i ? ", " : "") << v.witness->elements[i];
        }
        if (v.witness->side) {
          out << ", " << to_string(*v.witness->side);
        }
        out << ")";
      }
      out << " [checks " << v.checks_performed << "]";
      return out.str();
    }

    std::string blocks_text(SetPartition const& p) {
      std::string out;
      for (auto const& block : p.blocks()) {
        out += out.empty() ? "{" : " {";
        for (std::size_t i = 0; i < block.size(); ++i) {
          out += (i ? " " : "") + std::to_string(block[i]);
        }
        out += "}";
      }
      return out;
    }

    std::string error_type(std::exception const& e) {
      if (dynamic_cast<CycleDetected const*>(&e)) return "CycleDetected";
      if (dynamic_cast<NotALattice const*>(&e)) return "NotALattice";
      if (dynamic_cast<NotReduced const*>(&e)) return "NotReduced";
      if (dynamic_cast<NotComparable const*>(&e)) return "NotComparable";
      if (dynamic_cast<BadPartition const*>(&e)) return "BadPartition";
      if (dynamic_cast<NotEquivalence const*>(&e)) return "NotEquivalence";
      if (dynamic_cast<NotReflexive const*>(&e)) return "NotReflexive";
      if (dynamic_cast<NotIntervalBlocks const*>(&e)) return "NotIntervalBlocks";
      if (dynamic_cast<TooLarge const*>(&e)) return "TooLarge";
      if (dynamic_cast<ParseError const*>(&e)) return "ParseError";
      if (dynamic_cast<InvalidInput const*>(&e)) return "InvalidInput";
      if (dynamic_cast<AgreementFailure const*>(&e)) return "AgreementFailure";
      return "Error";
    }

    std::string load_input(std::string const& path, std::string const& role, Report& report) {
      auto contents = io::read_file(path);
      report.inputs.push_back({{"role", role}, {"path", path}, {"sha256", io::digest(contents)}});
      return contents;
    }

    FiniteLattice load_lattice(Options const& opts, Report& report) {
      return io::parse_lattice(load_input(opts.lattice_path, "lattice", report));
    }

    SetPartition load_partition(Options const& opts, FiniteLattice const& lattice, Report& report) {
      return io::parse_partition(load_input(opts.partition_path, "partition", report), lattice.size());
    }

    void cmd_validate(Options const& opts, Report& report) {
      auto const lattice = load_lattice(opts, report);
      auto const semi    = is_semimodular(lattice);
      auto const squares = covering_squares(lattice);
      report.result      = {{"size", lattice.size()},
                            {"covers", lattice.covers().size()},
                            {"length", lattice.length()},
                            {"bottom", lattice.bottom()},
                            {"top", lattice.top()},
                            {"semimodular", semi.holds},
                            {"semimodular_witness", nullptr},
                            {"covering_squares", squares.size()},
                            {"join_cover_configurations", join_cover_configurations(lattice)}};
      report.text        = {"size " + std::to_string(lattice.size()),
                            "covers " + std::to_string(lattice.covers().size()),
                            "length " + std::to_string(lattice.length()),
                            "bottom " + std::to_string(lattice.bottom()),
                            "top " + std::to_string(lattice.top())};
      std::string semi_line = std::string("semimodular ") + (semi.holds ? "true" : "false");
      if (semi.witness) {
        report.result["semimodular_witness"] = {semi.witness->first, semi.witness->second};
        semi_line += " (witness " + std::to_string(semi.witness->first) + " "
                     + std::to_string(semi.witness->second) + ")";
      }
      report.text.push_back(semi_line);
      report.text.push_back("covering_squares " + std::to_string(squares.size()) + " of "
                            + std::to_string(join_cover_configurations(lattice))
                            + " join-cover configurations");
    }

    void cmd_check(Options const& opts, Report& report) {
      auto const lattice = load_lattice(opts, report);
      auto const p       = load_partition(opts, lattice, report);

      json                           verdicts = json::object();
      std::vector<CongruenceVerdict> ran;
      auto record = [&](std::string const& name, CongruenceVerdict const& v) {
        verdicts[name]         = io::to_json(v);
        report.counters[name]  = v.checks_performed;
        report.text.push_back(name + ": " + verdict_text(v));
        ran.push_back(v);
      };

      bool const all = opts.method == "all";
      if (all || opts.method == "naive") {
        record("naive", check_naive(lattice, p));
      }
      if (all || opts.method == "classical") {
        record("classical", check_classical(lattice, relation_of(p)));
      }
      if (all || opts.method == "covers") {
        if (all) {
          if (auto ip = try_certify_interval_blocks(lattice, p)) {
            record("covers", check_covers(lattice, *ip));
          } else {
            verdicts["covers"] = "not applicable: blocks are not intervals";
            report.text.push_back("covers: not applicable (blocks are not intervals)");
          }
        } else {
          record("covers", check_covers(lattice, certify_interval_blocks(lattice, p)));
        }
      }

      report.result["verdicts"] = verdicts;
      bool agree                = true;
      for (auto const& v : ran) {
        agree = agree && v.outcome == ran.front().outcome;
      }
      if (all) {
        report.result["agree"] = agree;
      }
      if (!agree) {
        report.text.push_back("DISAGREEMENT between checkers");
        report.exit_code = exit_disagreement;
      } else if (!ran.front().is_congruence()) {
        report.exit_code = exit_violation;
      }
    }

    void cmd_con(Options const& opts, Report& report) {
      auto const   lattice = load_lattice(opts, report);
      ConAlgorithm algorithm
          = opts.algorithm == "brute"
                ? ConAlgorithm::brute
                : (opts.algorithm == "generated" ? ConAlgorithm::generated : ConAlgorithm::both);
      auto const con = all_congruences(lattice, algorithm, opts.max_n);
      auto const ji  = join_irreducibles(con);

      report.result              = io::to_json(con);
      report.result["algorithm"] = opts.algorithm;
      report.result["count"]     = con.size();
      report.counters["congruences"]       = con.size();
      report.counters["join_irreducibles"] = ji.size();
      report.text.push_back("congruences " + std::to_string(con.size()));
      report.text.push_back("join_irreducibles " + std::to_string(ji.size()));
      if (algorithm == ConAlgorithm::both) {
        report.text.push_back("algorithms agree");
      }
      for (std::size_t i = 0; i < con.size(); ++i) {
        report.text.push_back("  " + std::to_string(i) + ": " + blocks_text(con[i])
                              + (con.is_join_irreducible(i) ? "  (join-irreducible)" : ""));
      }
      if (!opts.dot_path.empty()) {
        std::ofstream dot(opts.dot_path);
        if (!dot) {
          throw InvalidInput("cannot write " + opts.dot_path);
        }
        dot << io::con_dot(con);
        report.text.push_back("wrote " + opts.dot_path);
      }
    }

    template <typename F>
    double time_ms(F&& f) {
      auto const start = std::chrono::steady_clock::now();
      f();
      return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
    }

    void cmd_bench(Options const& opts, Report& report) {
      auto const lattice = load_lattice(opts, report);
      auto const p       = load_partition(opts, lattice, report);
      auto const ip      = certify_interval_blocks(lattice, p);
      auto const counts  = count_configurations(lattice, ip);

      CongruenceVerdict naive, covers;
      double const      naive_ms  = time_ms([&] { naive = check_naive(lattice, p); });
      double const      covers_ms = time_ms([&] { covers = check_covers(lattice, ip); });
      if (naive.outcome != covers.outcome) {
        report.exit_code = exit_disagreement;
      }

      report.counters = {{"covers_count", counts.covers_count},
                         {"naive_count", counts.naive_count},
                         {"ratio", counts.ratio()}};
      report.result   = {{"verdicts", {{"naive", io::to_json(naive)}, {"covers", io::to_json(covers)}}},
                         {"agree", naive.outcome == covers.outcome}};
      // Timings are kept out of the deterministic payload.
      report.text = {"covers_count " + std::to_string(counts.covers_count),
                     "naive_count " + std::to_string(counts.naive_count),
                     "ratio " + std::to_string(counts.ratio()),
                     "naive: " + verdict_text(naive) + " in " + std::to_string(naive_ms) + " ms",
                     "covers: " + verdict_text(covers) + " in " + std::to_string(covers_ms) + " ms"};
    }

    void cmd_export_dot(Options const& opts, Report& report) {
      auto const lattice = load_lattice(opts, report);
      std::string dot;
      if (opts.partition_path.empty()) {
        dot = io::hasse_dot(lattice);
      } else {
        auto const p = load_partition(opts, lattice, report);
        dot          = io::hasse_dot(lattice, &p);
      }
      report.result = {{"dot", dot}};
      report.text   = {dot};
    }

    std::size_t parse_count(std::vector<std::string> const& args, std::size_t i) {
      if (i >= args.size()) {
        throw InvalidInput("gen: missing size argument");
      }
      std::size_t value = 0;
      auto const& s     = args[i];
      auto [ptr, ec]    = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw InvalidInput("gen: \"" + s + "\" is not a size");
      }
      return value;
    }

    FiniteLattice generate(Options const& opts, Report& report) {
      auto const& a = opts.gen_args;
      if (a.empty()) {
        throw InvalidInput("gen: missing lattice kind");
      }
      auto expect = [&](std::size_t count) {
        if (a.size() != count + 1) {
          throw InvalidInput("gen " + a[0] + ": expected " + std::to_string(count) + " argument(s)");
        }
      };
      auto file = [&](std::size_t i) {
        return io::parse_lattice(load_input(a[i], "lattice", report));
      };
      std::string const& kind = a[0];
      if (kind == "chain") {
        expect(1);
        return catalog::chain(parse_count(a, 1));
      }
      if (kind == "boolean") {
        expect(1);
        return catalog::boolean(parse_count(a, 1));
      }
      if (kind == "m3") {
        expect(0);
        return catalog::m3();
      }
      if (kind == "n5") {
        expect(0);
        return catalog::n5();
      }
      if (kind == "square") {
        expect(0);
        return catalog::covering_square();
      }
      if (kind == "grid") {
        expect(2);
        return catalog::grid(parse_count(a, 1), parse_count(a, 2));
      }
      if (kind == "product") {
        expect(2);
        return catalog::direct_product(file(1), file(2));
      }
      if (kind == "ordinal-sum") {
        expect(2);
        return catalog::ordinal_sum(file(1), file(2));
      }
      throw InvalidInput("gen: unknown lattice kind \"" + kind + "\"");
    }

    void emit(Report const& report, bool as_json, double wall_ms, std::ostream& out) {
      if (as_json) {
        json doc{{"command", report.command},
                 {"args", report.args},
                 {"inputs", report.inputs},
                 {"result", report.result},
                 {"counters", report.counters},
                 {"exit_code", report.exit_code},
                 {"wall_time_ms", wall_ms}};
        out << doc.dump(2) << "\n";
        return;
      }
      for (auto const& line : report.text) {
        out << line;
        if (line.empty() || line.back() != '\n') {
          out << "\n";
        }
      }
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite lattice congruence checker", "latcon"};
    app.require_subcommand(1);
    Options opts;

    auto add_json = [&](CLI::App* sub) {
      sub->add_flag("--json", opts.json, "Emit a JSON report");
    };
    std::vector<std::string> const methods    = {"naive", "classical", "covers", "all"};
    std::vector<std::string> const algorithms = {"brute", "generated", "both"};

    auto* validate = app.add_subcommand("validate", "Validate a lattice file and describe it");
    validate->add_option("lattice", opts.lattice_path)->required();
    add_json(validate);

    auto* check = app.add_subcommand("check", "Decide whether a partition is a congruence");
    check->add_option("lattice", opts.lattice_path)->required();
    check->add_option("partition", opts.partition_path)->required();
    check->add_option("--method", opts.method)->check(CLI::IsMember(methods));
    add_json(check);

    auto* con = app.add_subcommand("con", "Enumerate all congruences");
    con->add_option("lattice", opts.lattice_path)->required();
    con->add_option("--algorithm", opts.algorithm)->check(CLI::IsMember(algorithms));
    con->add_option("--max-n", opts.max_n, "Largest carrier for brute-force enumeration");
    con->add_option("--dot", opts.dot_path, "Write the refinement order as DOT to this file");
    add_json(con);

    auto* bench = app.add_subcommand("bench", "Compare cover-level and naive case counts");
    bench->add_option("lattice", opts.lattice_path)->required();
    bench->add_option("partition", opts.partition_path)->required();
    add_json(bench);

    auto* gen = app.add_subcommand("gen", "Emit a catalog lattice");
    gen->add_option("kind", opts.gen_args,
                    "chain N | boolean K | m3 | n5 | square | grid P Q | product A B | ordinal-sum A B")
        ->required();
    gen->add_flag("--dual", opts.dual, "Emit the order dual");
    gen->add_flag("--json", opts.json, "Use the JSON lattice format");

    auto* export_dot = app.add_subcommand("export-dot", "Hasse diagram as DOT");
    export_dot->add_option("lattice", opts.lattice_path)->required();
    export_dot->add_option("partition", opts.partition_path);
    add_json(export_dot);

    std::vector<std::string> argv_store{"latcon"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char const*> argv;
    for (auto const& a : argv_store) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? exit_pass : exit_input_error;
    }

    Report report;
    report.args = args;
    std::function<void(Options const&, Report&)> command;
    if (validate->parsed()) {
      report.command = "validate";
      command        = cmd_validate;
    } else if (check->parsed()) {
      report.command = "check";
      command        = cmd_check;
    } else if (con->parsed()) {
      report.command = "con";
      command        = cmd_con;
    } else if (bench->parsed()) {
      report.command = "bench";
      command        = cmd_bench;
    } else if (export_dot->parsed()) {
      report.command = "export-dot";
      command        = cmd_export_dot;
    } else {
      try {
        auto lattice = generate(opts, report);
        if (opts.dual) {
          lattice = dual_lattice(lattice);
        }
        out << io::format_lattice(lattice, opts.json ? io::Format::json : io::Format::text);
        return exit_pass;
      } catch (std::exception const& e) {
        err << "error: " << error_type(e) << ": " << e.what() << "\n";
        return exit_input_error;
      }
    }

    auto const start = std::chrono::steady_clock::now();
    auto fail = [&](std::exception const& e, int code) {
      report.exit_code = code;
      report.result    = {{"error", {{"type", error_type(e)}, {"message", e.what()}}}};
      report.text.clear();
      err << "error: " << error_type(e) << ": " << e.what() << "\n";
    };
    try {
      command(opts, report);
    } catch (AgreementFailure const& e) {
      fail(e, exit_disagreement);
    } catch (NotIntervalBlocks const& e) {
      fail(e, exit_precondition);
    } catch (Error const& e) {
      fail(e, exit_input_error);
    } catch (std::exception const& e) {
      fail(e, exit_input_error);
    }
    double const wall_ms
        = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    emit(report, opts.json, wall_ms, out);
    return report.exit_code;
  }

}  // namespace latcon::cli
