#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "einflag/einstein.hpp"
#include "einflag/flag.hpp"
#include "einflag/liealg.hpp"
#include "einflag/report.hpp"
#include "einflag/ricci.hpp"
#include "einflag/rootsys.hpp"
#include "einflag/triples.hpp"

using namespace einflag;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Builds the compact form, going through the cache directory when
// EINFLAG_CACHE_DIR is set.
CompactLieAlgebra algebra_for(const std::string& token) {
  const char* dir = std::getenv("EINFLAG_CACHE_DIR");
  std::string path;
  if (dir && *dir) {
    path = std::string(dir) + "/" + token + ".brackets";
    if (auto cached = CompactLieAlgebra::load_cache(path)) {
      if (cached->type_token() == token) return *cached;
    }
  }
  CompactLieAlgebra L = compact_form(chevalley(RootSystem::build(token)));
  if (!path.empty()) L.save_cache(path);
  return L;
}

// Paper-method table for the two spaces treated by explicit linear systems.
std::optional<TripleTable> paper_table(const std::string& token, int node) {
  if (token == "E8" && node == 4) return triples_case_E();
  if (token == "E8" && node == 5) return triples_case_F();
  return std::nullopt;
}

struct TripleChoice {
  TripleTable table{0};
  std::string source;
};

// Resolves --triples for a space; exits with the proper status on failure.
TripleChoice resolve_triples(const std::string& token, int node,
                             const std::string& mode, const FlagSpace& fs) {
  TripleChoice out;
  auto t0 = std::chrono::steady_clock::now();
  if (mode == "paper") {
    auto t = paper_table(token, node);
    if (!t) {
      std::cerr << "error: no paper-method triple system for " << token << " node "
                << node << " (available: E8 node 4, E8 node 5)\n";
      std::exit(2);
    }
    out.table = *t;
    out.source = "paper";
  } else if (mode == "oracle") {
    out.table = triples_oracle(fs, algebra_for(token));
    out.source = "oracle";
  } else if (mode == "both") {
    TripleTable oracle = triples_oracle(fs, algebra_for(token));
    auto t = paper_table(token, node);
    if (t) {
      auto rep = assert_agreement(oracle, *t);
      if (!rep.pass) {
        std::cerr << "error: oracle and paper-method triples disagree:\n" << rep.diff;
        std::exit(1);
      }
      out.source = "both (agreement verified)";
    } else {
      out.source = "oracle (no paper-method system for this space)";
    }
    out.table = oracle;
  } else {
    std::cerr << "error: bad --triples mode '" << mode << "'\n";
    std::exit(2);
  }
  std::cout << "triples [" << out.source << "] in " << fmt_double9(seconds_since(t0))
            << " s\n";
  return out;
}

struct Table1Row {
  const char* token;
  int node;
  int expected;
};

// E(M) counts of Table 1 realized on desk-scale paintings; `core` adds the
// two E8 spaces, `full` adds classical samples and the remaining E6/E7/E8
// paintings.
std::vector<Table1Row> table1_rows(const std::string& subset) {
  std::vector<Table1Row> rows{
      {"A2", 1, 1},  // Hermitian symmetric, height 1
      {"G2", 1, 2},  // U(2) represented by the short root
      {"G2", 2, 3},  // U(2) represented by the long root
      {"F4", 1, 2},  // F4/Sp(3)xU(1)
      {"F4", 4, 2},  // F4/SO(7)xU(1)
  };
  if (subset == "quick") return rows;
  rows.push_back({"E8", 4, 6});
  rows.push_back({"E8", 5, 5});
  if (subset == "core" || subset.empty()) return rows;

  std::vector<Table1Row> extra{
      {"A1", 1, 1}, {"A3", 2, 1}, {"B3", 1, 1}, {"B3", 2, 2}, {"B3", 3, 2},
      {"B5", 2, 2}, {"C3", 1, 2}, {"C3", 2, 2}, {"C3", 3, 1}, {"C4", 2, 2},
      {"D4", 2, 2}, {"D5", 2, 2}, {"D6", 3, 2},
      {"F4", 2, 3}, {"F4", 3, 3},
      {"E6", 1, 1}, {"E6", 2, 2}, {"E6", 3, 3}, {"E6", 6, 2},
      {"E7", 1, 1}, {"E7", 2, 2}, {"E7", 3, 3}, {"E7", 4, 3},
      {"E7", 5, 3}, {"E7", 6, 2}, {"E7", 7, 2},
      {"E8", 1, 2}, {"E8", 2, 3}, {"E8", 3, 5}, {"E8", 6, 3},
      {"E8", 7, 2}, {"E8", 8, 3},
  };
  rows.insert(rows.end(), extra.begin(), extra.end());
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariant Einstein metrics on flag manifolds with b2 = 1"};
  app.require_subcommand(1);

  std::string type_token, triples_mode = "both", out_path, subset = "core";
  int node = 0, expect = -1;
  SolverConfig cfg;

  auto add_solver_flags = [&](CLI::App* cmd) {
    cmd->add_option("--seed", cfg.seed, "solver seed");
    cmd->add_option("--starts", cfg.starts, "multistart count");
    cmd->add_option("--tol", cfg.newton_tol, "Newton residual tolerance");
  };

  bool full_roots = false;
  auto* roots_cmd = app.add_subcommand("roots", "print a root system summary");
  roots_cmd->add_option("type", type_token, "Lie type, e.g. E8")->required();
  roots_cmd->add_flag("--full", full_roots, "also dump the positive root list");

  auto* flag_cmd = app.add_subcommand("flag", "print the painted-diagram data");
  flag_cmd->add_option("type", type_token)->required();
  flag_cmd->add_option("--node", node, "painted node (1-based)")->required();

  auto* triples_cmd = app.add_subcommand("triples", "print the structure-constant table");
  triples_cmd->add_option("type", type_token)->required();
  triples_cmd->add_option("--node", node)->required();
  triples_cmd->add_option("--triples", triples_mode, "oracle|paper|both")
      ->check(CLI::IsMember({"oracle", "paper", "both"}));

  auto* classify_cmd = app.add_subcommand("classify", "classify invariant Einstein metrics");
  classify_cmd->add_option("type", type_token)->required();
  classify_cmd->add_option("--node", node)->required();
  classify_cmd->add_option("--triples", triples_mode, "oracle|paper|both")
      ->check(CLI::IsMember({"oracle", "paper", "both"}));
  classify_cmd->add_option("--out", out_path, "write the structured report here");
  classify_cmd->add_option("--expect", expect, "fail unless this many metrics are found");
  add_solver_flags(classify_cmd);

  auto* table1_cmd = app.add_subcommand("table1", "reproduce the metric counts per space");
  table1_cmd->add_option("--subset", subset, "quick|core|full")
      ->check(CLI::IsMember({"quick", "core", "full"}));
  add_solver_flags(table1_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (roots_cmd->parsed()) {
      RootSystem rs = RootSystem::build(type_token);
      std::cout << rs.positive_roots().size() << " positive roots, highest root "
                << rs.highest_root().str() << "\n";
      std::cout << "node heights:";
      for (int i = 1; i <= rs.rank(); ++i) std::cout << " " << rs.height_of_node(i);
      std::cout << "\n";
      if (full_roots) std::cout << rs.dump();
      return 0;
    }

    if (flag_cmd->parsed()) {
      FlagSpace fs = paint(RootSystem::build(type_token), node);
      std::cout << fs.dump();
      return 0;
    }

    if (triples_cmd->parsed()) {
      FlagSpace fs = paint(RootSystem::build(type_token), node);
      auto choice = resolve_triples(type_token, node, triples_mode, fs);
      std::cout << "triples [" << choice.source << "]:\n" << choice.table.serialize();
      return 0;
    }

    if (classify_cmd->parsed()) {
      auto t0 = std::chrono::steady_clock::now();
      FlagSpace fs = paint(RootSystem::build(type_token), node);
      std::cout << fs.root_system().type_token() << " node " << node << ": "
                << fs.isotropy_label() << ", dims";
      for (int d : fs.dims()) std::cout << " " << d;
      std::cout << ", dim h = " << fs.dim_isotropy() << "\n";

      auto choice = resolve_triples(type_token, node, triples_mode, fs);
      auto t1 = std::chrono::steady_clock::now();
      auto cls = classify(fs, choice.table, cfg);
      std::cout << "solved in " << fmt_double9(seconds_since(t1)) << " s ("
                << cfg.starts << " starts)\n";
      std::cout << cls.solutions.size() << " invariant Einstein metrics ("
                << cls.n_kahler << " Kahler, " << cls.n_nonkahler << " non-Kahler), "
                << cls.isometry_classes.size() << " isometry classes\n";
      std::cout << format_solution_table(cls);
      for (const auto& r : cls.rejected) std::cout << "note: " << r << "\n";

      if (!out_path.empty()) {
        RunReport rep;
        rep.space = fs.root_system().type_token() + " node " + std::to_string(node);
        rep.isotropy = fs.isotropy_label();
        rep.dims = fs.dims();
        rep.dim_isotropy = fs.dim_isotropy();
        rep.dim_g = fs.dim_g();
        rep.triples_source = choice.source;
        rep.triples = choice.table;
        rep.config = cfg;
        rep.classification = cls;
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
          std::cerr << "error: cannot write " << out_path << "\n";
          return 1;
        }
        f << format_report(rep);
        std::cout << "report written to " << out_path << "\n";
      }
      std::cout << "total " << fmt_double9(seconds_since(t0)) << " s\n";

      if (expect >= 0 && (int)cls.solutions.size() != expect) {
        std::cerr << "error: expected " << expect << " metrics, found "
                  << cls.solutions.size() << "\n";
        return 1;
      }
      if (!cls.rejected.empty()) {
        std::cerr << "error: " << cls.rejected.size()
                  << " root(s) failed the Ricci re-verification\n";
        return 1;
      }
      return 0;
    }

    if (table1_cmd->parsed()) {
      auto rows = table1_rows(subset);
      bool all_ok = true;
      for (const auto& row : rows) {
        auto t0 = std::chrono::steady_clock::now();
        FlagSpace fs = paint(RootSystem::build(row.token), row.node);
        TripleTable t = triples_oracle(fs, algebra_for(row.token));
        auto cls = classify(fs, t, cfg);
        bool ok = (int)cls.solutions.size() == row.expected;
        all_ok = all_ok && ok;
        std::cout << (ok ? "ok   " : "FAIL ") << row.token << " node " << row.node
                  << "  " << fs.isotropy_label() << "  E(M) = " << cls.solutions.size()
                  << " expected " << row.expected << "  ("
                  << fmt_double9(seconds_since(t0)) << " s)\n";
      }
      return all_ok ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
