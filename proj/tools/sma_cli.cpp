// Command-line front end: construct, verify, decide, oracle probes and
// catalog management for signed magic arrays.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sma/catalog.hpp"
#include "sma/decide.hpp"
#include "sma/grid_io.hpp"
#include "sma/grid_ops.hpp"
#include "sma/oracle.hpp"
#include "sma/providers.hpp"
#include "sma/rectangles.hpp"
#include "sma/squares.hpp"
#include "sma/tight.hpp"
#include "sma/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUnsupported = 2;
constexpr int kExitProviderTimeout = 3;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

struct CommonOpts {
  std::string catalog_dir;
  std::string format = "json";
  std::string out;
  long long node_budget = 80'000'000;
  long long time_budget_ms = 60'000;
  int jobs = 1;     // accepted for interface stability; runs sequentially
  long long seed = 0;  // accepted and ignored: all algorithms deterministic
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--catalog", opts.catalog_dir,
                  "catalog directory (default: $SMA_CATALOG_DIR or ./catalog)");
  cmd->add_option("--format", opts.format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", opts.out, "write the grid to a file");
  cmd->add_option("--node-budget", opts.node_budget, "search node budget");
  cmd->add_option("--time-budget-ms", opts.time_budget_ms,
                  "search time budget in milliseconds");
  cmd->add_option("--jobs", opts.jobs, "worker count (accepted; sequential)");
  cmd->add_option("--seed", opts.seed, "accepted and ignored (deterministic)");
}

sma::Catalog open_catalog(const CommonOpts& opts) {
  if (!opts.catalog_dir.empty()) return sma::Catalog(opts.catalog_dir);
  return sma::Catalog::from_env();
}

int emit_grid(const sma::SignedGrid& grid, const sma::ArraySpec& spec,
              const CommonOpts& opts) {
  const std::string payload = opts.format == "text"
                                  ? sma::to_text(grid, spec)
                                  : sma::to_json(grid, spec);
  if (opts.out.empty()) {
    std::cout << payload;
  } else {
    sma::save_grid_file(opts.out, payload);
  }
  return kExitOk;
}

nlohmann::ordered_json report_json(const sma::VerificationReport& rep) {
  nlohmann::ordered_json j;
  j["is_valid_sma"] = rep.is_valid_sma;
  j["row_sums"] = rep.row_sums;
  j["col_sums"] = rep.col_sums;
  j["row_fill_counts"] = rep.row_fill_counts;
  j["col_fill_counts"] = rep.col_fill_counts;
  j["symbol_coverage_ok"] = rep.symbol_coverage_ok;
  j["is_shiftable"] = rep.is_shiftable;
  if (rep.diagonal_width) {
    j["diagonal_width"] = *rep.diagonal_width;
  } else {
    j["diagonal_width"] = nullptr;
  }
  auto failures = nlohmann::ordered_json::array();
  for (size_t r = 0; r < rep.row_sums.size(); ++r) {
    if (rep.row_sums[r] != 0) {
      failures.push_back("row " + std::to_string(r + 1) + " sums to " +
                         std::to_string(rep.row_sums[r]));
    }
  }
  for (size_t c = 0; c < rep.col_sums.size(); ++c) {
    if (rep.col_sums[c] != 0) {
      failures.push_back("column " + std::to_string(c + 1) + " sums to " +
                         std::to_string(rep.col_sums[c]));
    }
  }
  if (!rep.symbol_coverage_ok) failures.push_back("symbol coverage");
  j["failures"] = std::move(failures);
  return j;
}

std::optional<sma::ArraySpec> parse_spec_csv(const std::string& text) {
  sma::ArraySpec spec;
  char c1 = 0, c2 = 0, c3 = 0;
  std::istringstream in(text);
  if (!(in >> spec.m >> c1 >> spec.n >> c2 >> spec.s >> c3 >> spec.t) ||
      c1 != ',' || c2 != ',' || c3 != ',') {
    return std::nullopt;
  }
  std::string rest;
  if (in >> rest) return std::nullopt;
  return spec;
}

void print_decision(const sma::Decision& d) {
  std::cout << sma::to_string(d.verdict);
  if (d.exists() && !d.method.empty()) {
    std::cout << " (method: " << d.method << ")";
  } else if (!d.exists() && !d.reason.empty()) {
    std::cout << " (reason: " << d.reason << ")";
  }
  std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signed magic array toolkit"};
  app.require_subcommand(1);

  CommonOpts opts;

  // construct
  auto* construct = app.add_subcommand("construct", "build an array");
  construct->require_subcommand(1);
  int rows = 0, cols = 0, square_n = 0, square_t = 0, dbl_m = 0, dbl_t = 0;
  auto* c_tight = construct->add_subcommand("tight", "tight SMA(m,n)");
  c_tight->add_option("--rows", rows, "row count")->required();
  c_tight->add_option("--cols", cols, "column count")->required();
  add_common(c_tight, opts);
  auto* c_square = construct->add_subcommand("square", "SMS(n;t)");
  c_square->add_option("--n", square_n, "order")->required();
  c_square->add_option("--t", square_t, "filled cells per line")->required();
  add_common(c_square, opts);
  auto* c_double = construct->add_subcommand("double", "SMA(m,2m;2t,t)");
  c_double->add_option("--m", dbl_m, "row count")->required();
  c_double->add_option("--t", dbl_t, "filled cells per column")->required();
  add_common(c_double, opts);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "verify a grid file");
  std::string verify_file;
  verify_cmd->add_option("file", verify_file, "grid file (json or text)")
      ->required();

  // decide
  auto* decide_cmd =
      app.add_subcommand("decide", "existence verdict for a spec");
  std::vector<int> decide_args;
  decide_cmd->add_option("spec", decide_args, "m n s t")->expected(4);
  add_common(decide_cmd, opts);

  // oracle
  auto* oracle_cmd =
      app.add_subcommand("oracle", "exhaustive search at desk scale");
  std::string oracle_spec;
  int max_cells = 14;
  bool do_count = false;
  oracle_cmd->add_option("--spec", oracle_spec, "m,n,s,t")->required();
  oracle_cmd->add_option("--max-cells", max_cells, "filled-cell cap");
  oracle_cmd->add_flag("--count", do_count, "count all solutions");
  add_common(oracle_cmd, opts);

  // catalog
  auto* catalog_cmd = app.add_subcommand("catalog", "manage the catalog");
  auto* cat_list = catalog_cmd->add_subcommand("list", "list entries");
  add_common(cat_list, opts);
  auto* cat_add = catalog_cmd->add_subcommand("add", "add a grid file");
  std::string add_file;
  cat_add->add_option("file", add_file, "grid file")->required();
  add_common(cat_add, opts);
  auto* cat_gc = catalog_cmd->add_subcommand("gc", "drop corrupt entries");
  add_common(cat_gc, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (c_tight->parsed() || c_square->parsed() || c_double->parsed()) {
      sma::Catalog cat = open_catalog(opts);
      sma::BuildContext ctx;
      ctx.limits.node_budget = opts.node_budget;
      ctx.limits.time_budget_ms = opts.time_budget_ms;
      ctx.catalog = &cat;
      if (c_tight->parsed()) {
        auto g = sma::tight::construct_tight(rows, cols, ctx);
        return emit_grid(g, sma::ArraySpec::tight(rows, cols), opts);
      }
      if (c_square->parsed()) {
        auto g = sma::squares::construct_sms(square_n, square_t, ctx);
        return emit_grid(g, sma::ArraySpec::square(square_n, square_t), opts);
      }
      auto g = sma::rects::construct_double_rectangle(dbl_m, dbl_t, ctx);
      return emit_grid(g, sma::ArraySpec::double_rect(dbl_m, dbl_t), opts);
    }

    if (verify_cmd->parsed()) {
      sma::GridFile gf = sma::load_grid_file(verify_file);
      auto rep = sma::verify(gf.grid, gf.spec);
      std::cout << report_json(rep).dump(2) << "\n";
      return rep.is_valid_sma ? kExitOk : kExitInvalid;
    }

    if (decide_cmd->parsed()) {
      const int m = decide_args[0], n = decide_args[1];
      const int s = decide_args[2], t = decide_args[3];
      if (n == 2 * m && s == 2 * t && m >= t && t >= 3) {
        sma::Catalog cat = open_catalog(opts);
        print_decision(sma::decide_double_rectangle(m, t, &cat));
        return kExitOk;
      }
      if (s == n && t == m) {
        print_decision(sma::decide_tight(m, n));
        return kExitOk;
      }
      if (m == n && s == t) {
        print_decision(sma::decide_square(n, t));
        return kExitOk;
      }
      std::cerr << "family not characterized: expected tight (s=n, t=m), "
                   "square (m=n, s=t) or double (n=2m, s=2t)\n";
      return kExitUnsupported;
    }

    if (oracle_cmd->parsed()) {
      auto spec = parse_spec_csv(oracle_spec);
      if (!spec) {
        std::cerr << "bad --spec, expected m,n,s,t\n";
        return kExitUsage;
      }
      sma::providers::SearchLimits limits;
      limits.node_budget = opts.node_budget;
      limits.time_budget_ms = opts.time_budget_ms;
      limits.max_filled_cells = max_cells;
      if (do_count) {
        auto res = sma::oracle::count_all(*spec, limits);
        if (res.complete) {
          std::cout << "count " << res.count << " (exhaustive), nodes "
                    << res.nodes << "\n";
        } else {
          std::cout << "inconclusive (" << res.note << "), nodes " << res.nodes
                    << "\n";
        }
        return kExitOk;
      }
      auto res = sma::oracle::search_one(*spec, limits);
      std::cout << sma::oracle::to_string(res.outcome);
      if (!res.note.empty()) std::cout << " (" << res.note << ")";
      std::cout << ", nodes " << res.nodes << "\n";
      if (res.grid) std::cout << sma::to_text(*res.grid, *spec);
      return kExitOk;
    }

    if (cat_list->parsed()) {
      sma::Catalog cat = open_catalog(opts);
      for (const auto& key : cat.keys()) {
        try {
          auto e = cat.get(key);
          std::cout << key << " " << e->family << " " << e->provenance << " "
                    << e->digest << "\n";
        } catch (const sma::integrity_error& err) {
          std::cout << key << " [corrupt: " << err.what() << "]\n";
        }
      }
      return kExitOk;
    }
    if (cat_add->parsed()) {
      sma::Catalog cat = open_catalog(opts);
      sma::GridFile gf = sma::load_grid_file(add_file);
      auto family = sma::infer_family(gf);
      if (!family) {
        std::cerr << "grid fits no catalog family\n";
        return kExitUnsupported;
      }
      sma::CatalogEntry entry;
      entry.family = *family;
      if (*family == "magic_rectangle") {
        entry.key = sma::magic_rectangle_key(gf.spec.m, gf.spec.n);
      } else if (*family == "tight_heffter") {
        entry.key = sma::tight_heffter_key(gf.spec.m, gf.spec.n);
      } else {
        entry.key = sma::square_heffter_key(gf.spec.n, gf.spec.t);
      }
      entry.spec = gf.spec;
      entry.grid = gf.grid;
      entry.provenance = "user-supplied";
      cat.put(entry);
      std::cout << "stored " << entry.key << "\n";
      return kExitOk;
    }
    if (cat_gc->parsed()) {
      sma::Catalog cat = open_catalog(opts);
      std::cout << "removed " << cat.gc() << " entries\n";
      return kExitOk;
    }
  } catch (const sma::provider_timeout& e) {
    std::cerr << e.what() << "\n";
    return kExitProviderTimeout;
  } catch (const sma::unsupported_params& e) {
    std::cerr << e.what() << "\n";
    return kExitUnsupported;
  } catch (const sma::parse_error& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const sma::argument_error& e) {
    std::cerr << e.what() << "\n";
    return kExitUnsupported;
  } catch (const sma::error& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitUsage;
}
