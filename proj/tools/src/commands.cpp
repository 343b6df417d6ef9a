#include "grmlab_cli/commands.hpp"

#include <cstdlib>
#include <fstream>

#include "grmlab/decomp.hpp"
#include "grmlab/endo_qh.hpp"
#include "grmlab/errors.hpp"

namespace grmlab::cli {

json config_to_json(const RunConfig& c) {
  return {{"command", c.command},
          {"algebra", c.algebra},
          {"module", c.module},
          {"weights", c.weights},
          {"kind", c.kind},
          {"chain_file", c.chain_file},
          {"caps",
           {{"max_enum_field_power", c.caps.max_enum_field_power},
            {"max_hom_enum", c.caps.max_hom_enum},
            {"max_submodules", c.caps.max_submodules},
            {"random_attempts", c.caps.random_attempts},
            {"pd_cap", c.caps.pd_cap}}},
          {"seed", c.caps.seed},
          {"format", c.format}};
}

void apply_environment(RunConfig& config) {
  if (const char* s = std::getenv("GRMLAB_SEED")) {
    try {
      config.caps.seed = std::stoull(s);
    } catch (const std::exception&) {
      throw MalformedInput("GRMLAB_SEED must be an unsigned integer");
    }
  }
}

namespace {

LengthFunction weights_of(const RunConfig& c, const AlgebraPtr& a) {
  return c.weights.empty() ? LengthFunction::unit(a->num_vertices()) : parse_weights(a, c.weights);
}

Representation module_of(const RunConfig& c, const AlgebraPtr& a) {
  if (c.module.empty()) throw MalformedInput("--module is required");
  return parse_module(a, c.module);
}

RejectiveChain build_chain(const RunConfig& c, const AlgebraPtr& a) {
  if (!c.chain_file.empty()) {
    json j;
    try {
      j = json::parse(read_file(c.chain_file));
    } catch (const json::parse_error& e) {
      throw MalformedInput("chain file: " + std::string(e.what()));
    }
    return chain_from_steps(a, parse_chain_steps(a, j), ChainKind::Custom, c.caps);
  }
  switch (parse_chain_kind(c.kind)) {
    case ChainKind::GR: return gr_chain(module_of(c, a), weights_of(c, a), c.caps);
    case ChainKind::Iyama: return iyama_chain(module_of(c, a), c.caps);
    case ChainKind::ADR: return adr_chain(a, c.caps);
    case ChainKind::Custom: throw MalformedInput("--kind custom needs --chain");
  }
  throw MalformedInput("unknown chain kind");
}

json chain_to_json(const RejectiveChain& chain) {
  json j;
  j["kind"] = to_string(chain.kind);
  j["ell"] = chain.ell();
  j["steps"] = json::array();
  for (std::size_t i = 0; i < chain.ell(); ++i) {
    json s{{"dims", dims_to_json(chain.steps[i])}};
    if (i < chain.measures.size()) s["measure"] = measure_to_json(chain.measures[i]);
    j["steps"].push_back(s);
  }
  j["phi"] = json::array();
  for (const auto& e : chain.phi) {
    json p{{"id", e.id}, {"dims", dims_to_json(e.module)}, {"level", e.level}, {"multiplicity", e.multiplicity}};
    if (e.measure) p["measure"] = measure_to_json(*e.measure);
    j["phi"].push_back(p);
  }
  return j;
}

json optional_json(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

json certificate_to_json(const QHCertificate& c) {
  json j;
  j["ell"] = c.ell;
  j["gldim"] = optional_json(c.gldim);
  j["gamma_dim"] = c.gamma_dim;
  j["dualized"] = c.dualized;
  j["labels"] = json::array();
  for (const auto& l : c.labels) {
    j["labels"].push_back({{"id", l.id},
                           {"level", l.level},
                           {"multiplicity", l.multiplicity},
                           {"pd_simple", optional_json(l.pd_simple)},
                           {"pd_standard", optional_json(l.pd_standard)},
                           {"U_dim", l.u_dim},
                           {"U_decomposition", l.u_decomposition},
                           {"standard_dim", l.standard_dim},
                           {"checks",
                            {{"a", l.check_a},
                             {"b", l.check_b},
                             {"strong", l.strong},
                             {"trace", l.trace_agrees},
                             {"pd_bound", l.pd_bound}}}});
  }
  j["gldim_bound"] = c.gldim_bound;
  j["witnesses"] = c.witnesses;
  j["verdict"] = c.passed ? "left-strongly-quasihereditary" : "fail";
  return j;
}

json verdict_to_json(const RejectiveChain& chain, const ChainVerdict& v) {
  json j;
  j["ell"] = chain.ell();
  j["left_rejective"] = v.left_rejective;
  j["prerejective"] = v.prerejective;
  j["rejective"] = v.rejective;
  j["levels"] = json::array();
  for (const auto& l : v.levels)
    j["levels"].push_back({{"level", l.level},
                           {"left_rejective", l.left_rejective},
                           {"prerejective", l.prerejective},
                           {"rejective", l.rejective},
                           {"witnesses", l.witnesses}});
  j["approximations"] = json::array();
  for (const auto& ac : v.approximations)
    j["approximations"].push_back({{"id", chain.phi[ac.phi_index].id},
                                   {"level", ac.level},
                                   {"target_dims", dims_to_json(chain.algebra, ac.target_dims)},
                                   {"in_category", ac.in_category},
                                   {"epic", ac.epic},
                                   {"universal", ac.universal}});
  return j;
}

int execute(const RunConfig& c, json& out) {
  auto a = load_algebra(c.algebra);
  if (c.command == "measure") {
    auto m = module_of(c, a);
    auto g = gr_measure(m, weights_of(c, a), c.caps);
    out["measure"] = measure_to_json(g.value);
    out["witness"] = json::array();
    for (const auto& w : g.witness) out["witness"].push_back(dims_to_json(a, w.dims()));
    return 0;
  }
  if (c.command == "decompose") {
    auto d = decompose(module_of(c, a), c.caps);
    out["count"] = d.summand_count();
    out["summands"] = json::array();
    for (const auto& p : d.parts)
      out["summands"].push_back(
          {{"dims", dims_to_json(p.module)}, {"multiplicity", p.multiplicity}, {"module", module_to_json(p.module)}});
    return 0;
  }
  if (c.command == "chain") {
    auto chain = build_chain(c, a);
    out.update(chain_to_json(chain));
    return 0;
  }
  if (c.command == "verify-chain") {
    auto chain = build_chain(c, a);
    const bool dualize = chain.kind == ChainKind::Iyama;
    auto checked = dualize ? dual_chain(chain, c.caps) : chain;
    auto v = verify_chain(checked, c.caps);
    out["dualized"] = dualize;
    out.update(verdict_to_json(checked, v));
    return v.rejective ? 0 : 1;
  }
  if (c.command == "certify" || c.command == "gldim") {
    auto chain = build_chain(c, a);
    auto cert = certify(chain, c.caps);
    if (c.command == "certify") {
      out.update(certificate_to_json(cert));
      return cert.passed ? 0 : 1;
    }
    out["ell"] = cert.ell;
    out["gldim"] = optional_json(cert.gldim);
    out["pd_simple"] = json::object();
    for (const auto& l : cert.labels) out["pd_simple"][l.id] = optional_json(l.pd_simple);
    return cert.gldim ? 0 : 1;
  }
  throw MalformedInput("unknown command '" + c.command + "'");
}

}  // namespace

RunResult run(const RunConfig& config) {
  RunResult r;
  r.report["command"] = config.command;
  r.report["config"] = config_to_json(config);
  auto fail = [&](int code, const char* type, const std::string& msg) {
    r.exit_code = code;
    r.report["error"] = {{"type", type}, {"message", msg}};
  };
  try {
    if (config.format != "json" && config.format != "tsv") throw MalformedInput("format must be json or tsv");
    r.exit_code = execute(config, r.report);
  } catch (const CheckFailure& e) {
    fail(1, "check", e.what());
  } catch (const SearchCapExceeded& e) {
    fail(2, "cap", e.what());
  } catch (const LatticeCapExceeded& e) {
    fail(2, "cap", e.what());
  } catch (const Error& e) {
    fail(2, "input", e.what());
  } catch (const std::exception& e) {
    fail(2, "internal", e.what());
  }
  r.text = config.format == "tsv" ? to_tsv(r.report) : r.report.dump(2) + "\n";
  if (!config.output.empty()) {
    std::ofstream out(config.output, std::ios::binary);
    if (!out || !(out << r.text)) {
      r.exit_code = 2;
      r.text = "cannot write '" + config.output + "'\n";
    }
  }
  return r;
}

}  // namespace grmlab::cli
