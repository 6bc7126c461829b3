// qzm: verification suites, enumerations and cache management for the
// SU(n)_k zero-mode algebra at q = exp(-i pi / h).

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qzm/errors.hpp"
#include "qzm/suites.hpp"

int main(int argc, char** argv) {
  using namespace qzm;
  CLI::App app{"Exact verification of the SU(n)_k zero-mode Fock module and its Young diagram basis"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "text";
  app.add_option("--n", cfg.n, "rank parameter n of SU(n)")->check(CLI::Range(2, 8));
  app.add_option("--k", cfg.k, "level k; h = n + k")->check(CLI::Range(1, 64));
  app.add_flag("--generic-q", cfg.generic_q, "work over Q(q) instead of the cyclotomic field");
  app.add_option("--budget", cfg.budget, "generator ceiling per family elimination");
  app.add_option("--samples", cfg.samples, "number of seeded random states / field samples");
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--cache-dir", cfg.cache_dir, "directory of persisted family quotients");
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", cfg.out, "write the report to this file instead of stdout");
  app.add_option("--i", cfg.hook_row, "hook row for check-w")->check(CLI::Range(2, 8));

  auto* enumerate = app.add_subcommand("enumerate", "list the admissible Young diagrams");
  auto* verify_field = app.add_subcommand("verify-field", "q-integer identities and field axioms");
  auto* verify_algebra = app.add_subcommand("verify-algebra", "relations, determinant and bilinear identities");
  auto* fprime = app.add_subcommand("fprime", "dimension and structure of the diagonal subspace F'");
  auto* check_w = app.add_subcommand("check-w", "hook vanishing with the S/A decomposition audit");
  auto* cache = app.add_subcommand("cache", "manage the quotient-basis cache");
  cache->require_subcommand(1);
  cache->fallthrough();
  auto* cache_list = cache->add_subcommand("list", "list cached families");
  auto* cache_validate = cache->add_subcommand("validate", "re-derive every cached family");
  auto* cache_purge = cache->add_subcommand("purge", "remove all cached families");

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.format = format_from_string(format);
    std::optional<Report> report;
    if (enumerate->parsed()) {
      cfg.command = "enumerate";
      report = cmd_enumerate(cfg);
    } else if (verify_field->parsed()) {
      cfg.command = "verify-field";
      report = cmd_verify_field(cfg);
    } else if (verify_algebra->parsed()) {
      cfg.command = "verify-algebra";
      report = cmd_verify_algebra(cfg);
    } else if (fprime->parsed()) {
      cfg.command = "fprime";
      report = cmd_fprime(cfg);
    } else if (check_w->parsed()) {
      cfg.command = "check-w";
      report = cmd_check_w(cfg);
    } else if (cache->parsed()) {
      const std::string action = cache_list->parsed() ? "list" : cache_validate->parsed() ? "validate" : "purge";
      (void)cache_purge;
      cfg.command = "cache " + action;
      report = cmd_cache(cfg, action);
    }
    const std::string text = report->render(cfg.format);
    if (cfg.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(cfg.out);
      if (!out) throw UsageError("cannot write " + cfg.out);
      out << text;
    }
    return report->paper_claim_failed() ? 1 : 0;
  } catch (const std::exception& ex) {
    std::cerr << "qzm: " << ex.what() << '\n';
    return 2;
  }
}
