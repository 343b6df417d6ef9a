#include <iostream>

#include <CLI11.hpp>

#include "grmlab/errors.hpp"
#include "grmlab_cli/commands.hpp"

int main(int argc, char** argv) {
  using grmlab::cli::RunConfig;
  CLI::App app{"Gabriel-Roiter measures, rejective chains and quasihereditary certificates"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool needs_module) {
    sub->add_option("--algebra", cfg.algebra, "algebra JSON file or lambda1 | lambda2 | kronecker")
        ->capture_default_str();
    auto* m = sub->add_option("--module", cfg.module, "module expression, e.g. P:1 or Lambda+DLambda");
    if (needs_module) m->required();
    sub->add_option("--weights", cfg.weights, "one positive rational per vertex, e.g. 1,2 or 1/2,3");
    sub->add_option("--max-submodules", cfg.caps.max_submodules)->capture_default_str();
    sub->add_option("--max-enum", cfg.caps.max_enum_field_power)->capture_default_str();
    sub->add_option("--pd-cap", cfg.caps.pd_cap, "0 selects ell + dim Gamma")->capture_default_str();
    sub->add_option("--seed", cfg.caps.seed)->capture_default_str();
    sub->add_option("-o,--output", cfg.output, "report file (default stdout)");
    sub->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "tsv"}))->capture_default_str();
  };
  auto add_kind = [&](CLI::App* sub) {
    sub->add_option("--kind", cfg.kind)->check(CLI::IsMember({"gr", "iyama", "adr"}))->capture_default_str();
  };

  auto* measure = app.add_subcommand("measure", "weighted Gabriel-Roiter measure and a witness chain");
  add_common(measure, true);
  auto* decompose = app.add_subcommand("decompose", "indecomposable summands with multiplicities");
  add_common(decompose, true);
  auto* chain = app.add_subcommand("chain", "build a GR, Iyama or ADR chain");
  add_common(chain, false);
  add_kind(chain);
  auto* certify = app.add_subcommand("certify", "build the chain and certify End(X) quasihereditary");
  add_common(certify, false);
  add_kind(certify);
  auto* verify = app.add_subcommand("verify-chain", "check the rejective chain conditions");
  add_common(verify, false);
  add_kind(verify);
  verify->add_option("--chain", cfg.chain_file, "JSON file {\"steps\": [...]} with explicit X_1, ..., X_ell");
  auto* gldim = app.add_subcommand("gldim", "global dimension of End(X) for a chain");
  add_common(gldim, false);
  add_kind(gldim);

  CLI11_PARSE(app, argc, argv);
  cfg.command = app.get_subcommands().front()->get_name();
  try {
    grmlab::cli::apply_environment(cfg);
  } catch (const grmlab::Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  auto result = grmlab::cli::run(cfg);
  if (cfg.output.empty() || result.exit_code == 2) (result.exit_code == 2 ? std::cerr : std::cout) << result.text;
  return result.exit_code;
}
