// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// All comparisons are exact; the only tolerances are the runtime limits.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "grmlab/chains.hpp"
#include "grmlab/decomp.hpp"
#include "grmlab/endo_qh.hpp"
#include "grmlab/standard.hpp"
#include "grmlab/sublattice.hpp"
#include "support.hpp"

using namespace grmlab;
using namespace grmlab::testing;

namespace {

using Dims = std::vector<std::size_t>;
using Clock = std::chrono::steady_clock;

constexpr double kCriterion1Seconds = 5.0;
constexpr double kCriterion4Seconds = 60.0;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

MeasureValue mv(std::vector<Rational> v) { return MeasureValue{std::move(v)}; }

std::vector<Dims> step_dims(const RejectiveChain& c) {
  std::vector<Dims> out;
  for (const auto& s : c.steps) out.push_back(s.dims());
  return out;
}

bool iso(const Representation& a, const Representation& b) { return is_isomorphic(a, b).has_value(); }

std::optional<std::size_t> label_of(const RejectiveChain& c, const Representation& m) {
  for (std::size_t k = 0; k < c.phi.size(); ++k)
    if (isomorphism_of_indecomposables(c.phi[k].module, m)) return k;
  return std::nullopt;
}

/// The quotient of m by a copy of L_1 in its socle.
Representation mod_socle_l1(const Representation& m) {
  auto s = socle(m);
  Vector v = s.parts[0].basis().row_vector(0);
  return quotient(m, submodule_generated(m, std::vector<VertexVector>{{0, v}})).module;
}

bool all_levels_rejective(const RejectiveChain& c) {
  auto v = verify_chain(c);
  bool ok = v.left_rejective && v.prerejective && v.rejective;
  for (const auto& l : v.levels) ok = ok && l.rejective;
  return ok;
}

bool bounds_hold(const QHCertificate& cert) {
  if (!cert.gldim) return false;
  std::size_t max_pd = 0;
  for (const auto& l : cert.labels) {
    if (!l.pd_simple || *l.pd_simple > l.level) return false;
    max_pd = std::max(max_pd, *l.pd_simple);
  }
  return *cert.gldim == max_pd && *cert.gldim <= cert.ell;
}

const std::vector<LengthFunction>& weights() {
  static const std::vector<LengthFunction> w{LengthFunction({1, 1}), LengthFunction({1, 2}), LengthFunction({2, 1})};
  return w;
}

/// The GR chains of criteria 1-4 at one prime.
struct ChainSet {
  std::vector<std::string> names;
  std::vector<RejectiveChain> chains;
  std::vector<double> build_seconds;
};

ChainSet gr_chains(std::uint32_t p) {
  ChainSet s;
  const std::vector<std::string> tags{"(1,1)", "(1,2)", "(2,1)"};
  auto a1 = lambda1(p);
  for (std::size_t k = 0; k < 3; ++k) {
    auto t0 = Clock::now();
    s.chains.push_back(gr_chain(projective(a1, 0), weights()[k]));
    s.build_seconds.push_back(seconds_since(t0));
    s.names.push_back("L1 P1 " + tags[k]);
  }
  auto a2 = lambda2(p);
  for (std::size_t k = 0; k < 3; ++k) {
    auto t0 = Clock::now();
    s.chains.push_back(gr_chain(generator_cogenerator(a2), weights()[k]));
    s.build_seconds.push_back(seconds_since(t0));
    s.names.push_back("L2 GC " + tags[k]);
  }
  return s;
}

Outcome criterion1() {
  Outcome o;
  auto t0 = Clock::now();
  auto a = lambda1(2);
  auto c = gr_chain(projective(a, 0), LengthFunction({1, 1}));
  auto cert = certify(c);
  const double t = seconds_since(t0);
  o.require(c.ell() == 3, "ell != 3");
  o.require(step_dims(c) == std::vector<Dims>{{3, 1}, {2, 1}, {1, 0}}, "dimension vectors differ");
  o.require(c.measures == std::vector<MeasureValue>{mv({1, 2, 4}), mv({1, 3}), mv({1})}, "measures differ");
  o.require(cert.passed, "certificate failed");
  o.require(cert.gldim && *cert.gldim <= 3, "gldim > 3");
  o.require(t < kCriterion1Seconds, "runtime " + std::to_string(t) + " s");
  o.detail = o.pass ? "ell=3, gldim=" + std::to_string(*cert.gldim) + ", " + std::to_string(t) + " s" : o.detail;
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto a = lambda1(2);
  auto c = gr_chain(projective(a, 0), LengthFunction({1, 2}));
  o.require(c.ell() == 3, "ell != 3");
  o.require(c.measures == std::vector<MeasureValue>{mv({1, 2, 5}), mv({1, 4}), mv({2, 3})}, "measures differ");
  o.require(c.ell() == 3 && iso(c.steps[2], uniserial_12(a)), "X_3 is not the (1,1) uniserial");
  auto cert = certify(c);
  o.require(cert.passed, "certificate failed");
  auto x2 = label_of(c, c.steps[1]);
  o.require(x2 && cert.labels[*x2].pd_simple && *cert.labels[*x2].pd_simple <= 2, "pd L_{X_2} > 2");
  o.require(cert.gldim && *cert.gldim <= 3, "gldim > 3");
  if (o.pass)
    o.detail = "pd L_{X_2}=" + std::to_string(*cert.labels[*x2].pd_simple) + ", gldim=" + std::to_string(*cert.gldim);
  return o;
}

Outcome criterion3() {
  Outcome o;
  auto a = lambda1(2);
  auto c = gr_chain(projective(a, 0), LengthFunction({2, 1}));
  o.require(c.ell() == 4, "ell != 4");
  if (c.ell() == 4) {
    o.require(iso(c.steps[0], projective(a, 0)), "X_1 is not P_1");
    o.require(iso(c.steps[1], uniserial_loop(a, 3)), "X_2 is not the (3,0) uniserial");
    o.require(iso(c.steps[2], uniserial_loop(a, 2)), "X_3 is not the (2,0) uniserial");
    o.require(iso(c.steps[3], simple(a, 0)), "X_4 is not L_1");
  }
  if (o.pass) o.detail = "P1, (3,0), (2,0), L1";
  return o;
}

Outcome criterion4() {
  Outcome o;
  auto a = lambda2(2);
  auto p1 = projective(a, 0), q1 = injective(a, 0), l1 = simple(a, 0);
  const std::vector<Representation> base{p1, projective(a, 1), q1, injective(a, 1), mod_socle_l1(q1), l1,
                                         mod_socle_l1(p1)};
  const auto extra = mod_socle_l1(mod_socle_l1(p1));
  const std::vector<std::size_t> ells{5, 8, 6}, sizes{7, 8, 6};
  std::ostringstream times;
  for (std::size_t k = 0; k < 3; ++k) {
    auto t0 = Clock::now();
    auto c = gr_chain(generator_cogenerator(a), weights()[k]);
    const double t = seconds_since(t0);
    const std::string tag = "lambda #" + std::to_string(k + 1) + ": ";
    o.require(c.ell() == ells[k], tag + "ell=" + std::to_string(c.ell()));
    o.require(c.phi.size() == sizes[k], tag + "|Phi|=" + std::to_string(c.phi.size()));
    o.require(t < kCriterion4Seconds, tag + "runtime " + std::to_string(t) + " s");
    if (k == 0)
      for (const auto& m : base) o.require(label_of(c, m).has_value(), tag + "missing class " + m.dims_string());
    if (k == 1) {
      for (const auto& m : base) o.require(label_of(c, m).has_value(), tag + "missing class " + m.dims_string());
      o.require(label_of(c, extra).has_value(), tag + "missing (P1/L1)/L1");
    }
    times << (k ? ", " : "") << t << " s";
  }
  if (o.pass) o.detail = "ell 5/8/6, |Phi| 7/8/6, " + times.str();
  return o;
}

Outcome criterion5() {
  Outcome o;
  auto s = gr_chains(2);
  for (std::size_t k = 0; k < s.chains.size(); ++k) o.require(all_levels_rejective(s.chains[k]), s.names[k]);
  if (o.pass) o.detail = std::to_string(s.chains.size()) + " chains rejective at every level";
  return o;
}

Outcome criterion6() {
  Outcome o;
  auto a = kronecker(2);
  auto c = chain_from_steps(a, {kronecker_r(a), simple(a, 0)}, ChainKind::Custom);
  auto v = verify_chain(c);
  o.require(v.prerejective, "not prerejective");
  o.require(!v.rejective, "rejective");
  if (o.pass) o.detail = "prerejective, not rejective";
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto s = gr_chains(2);
  std::vector<std::pair<std::string, RejectiveChain>> all;
  for (std::size_t k = 0; k < s.chains.size(); ++k) all.emplace_back(s.names[k], s.chains[k]);
  all.emplace_back("ADR L1", adr_chain(lambda1(2)));
  all.emplace_back("ADR Kronecker", adr_chain(kronecker(2)));
  all.emplace_back("L1 GC (1,1)", gr_chain(generator_cogenerator(lambda1(2)), LengthFunction({1, 1})));
  all.emplace_back("Iyama L1 P1", iyama_chain(projective(lambda1(2), 0)));
  for (const auto& [name, c] : all) {
    auto cert = certify(c);
    o.require(cert.passed, name + ": certificate failed");
    o.require(bounds_hold(cert), name + ": bound violated");
  }
  if (o.pass) o.detail = std::to_string(all.size()) + " certified chains";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t n = 0, comparisons = 0;
  for (std::uint32_t p : {2u, 3u}) {
    for (const auto& e : corpus(p)) {
      ++n;
      auto lat = all_submodules(e.module);
      for (const auto& lam : weights()) {
        auto rec = gr_measure(lat, lam).value;
        o.require(rec == brute_force_measure(lat, lam), e.label + ": recursion differs from brute force");
        o.require(gr_measure(e.module, lam).value == rec, e.label + ": summand-wise value differs");
        ++comparisons;
      }
    }
  }
  o.require(n >= 50, "corpus has only " + std::to_string(n) + " modules");
  if (o.pass) o.detail = std::to_string(n) + " modules, " + std::to_string(comparisons) + " comparisons";
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::size_t n = 0;
  for (std::uint32_t p : {2u, 3u}) {
    auto entries = corpus(p);
    n += entries.size();
    for (const auto& lam : weights()) {
      std::vector<std::pair<Representation, MeasureValue>> indecomposables;
      for (const auto& e : entries) {
        auto lat = all_submodules(e.module);
        auto lm = lattice_measures(lat, lam);
        const auto& mu = lm.down[lat.top()];
        for (std::size_t i = 0; i < lat.size(); ++i) o.require(!(mu < lm.down[i]), e.label + ": monotonicity");
        if (is_indecomposable(e.module)) indecomposables.emplace_back(e.module, mu);
      }
      for (const auto& [m, mu] : indecomposables)
        for (const auto& [m2, mu2] : indecomposables)
          if (mu == mu2) o.require(weighted_length(m, lam) == weighted_length(m2, lam), "equal measures, unequal lengths");
      for (std::size_t i = 0; i + 1 < entries.size(); i += 2) {
        const auto& m = entries[i].module;
        const auto& n2 = entries[i + 1].module;
        if (!same_algebra(*m.algebra(), *n2.algebra()) || m.total_dim() + n2.total_dim() > 8) continue;
        auto s = direct_sum(std::vector<Representation>{m, n2}).module;
        auto mm = gr_measure_full_lattice(m, lam).value;
        auto mn = gr_measure_full_lattice(n2, lam).value;
        o.require(gr_measure_full_lattice(s, lam).value == std::max(mm, mn), entries[i].label + ": direct sum");
      }
    }
  }
  if (o.pass) o.detail = std::to_string(n) + " modules, three weightings";
  return o;
}

Outcome criterion10() {
  Outcome o;
  auto c1 = certify(adr_chain(lambda1(2)));
  o.require(c1.passed && c1.gldim && *c1.gldim <= 3, "ADR L1");
  auto ck = certify(adr_chain(kronecker(2)));
  o.require(ck.passed && ck.gldim && *ck.gldim <= 2, "ADR Kronecker");
  if (o.pass) o.detail = "gldim " + std::to_string(*c1.gldim) + " <= 3, " + std::to_string(*ck.gldim) + " <= 2";
  return o;
}

Outcome criterion11() {
  Outcome o;
  auto a = lambda1(2);
  auto c = iyama_chain(projective(a, 0));
  o.require(step_dims(c) == std::vector<Dims>{{3, 1}, {2, 0}, {1, 0}}, "dimension vectors differ");
  o.require(all_levels_rejective(dual_chain(c)), "dual chain not rejective");
  auto cert = certify(c);
  o.require(cert.dualized && cert.passed, "dualized certificate failed");
  if (o.pass) o.detail = "(3,1), (2,0), (1,0); dual rejective";
  return o;
}

Outcome criterion12() {
  Outcome o;
  std::ostringstream d;
  for (int which = 1; which <= 2; ++which) {
    auto a = which == 1 ? lambda1(2) : lambda2(2);
    auto cert = certify(generator_cogenerator(a), LengthFunction({1, 1}));
    o.require(cert.passed && cert.gldim.has_value(), "L" + std::to_string(which) + ": no finite gldim");
    if (cert.gldim) d << (which > 1 ? ", " : "") << "L" << which << " gldim " << *cert.gldim;
  }
  if (o.pass) o.detail = d.str();
  return o;
}

std::string signature(const RejectiveChain& c) {
  std::ostringstream s;
  s << "ell " << c.ell() << "\n";
  for (std::size_t i = 0; i < c.ell(); ++i) s << c.steps[i].dims_string() << " " << c.measures[i].to_string() << "\n";
  for (const auto& e : c.phi) s << e.id << " " << e.module.dims_string() << " level " << e.level << "\n";
  auto cert = certify(c);
  auto opt = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("inf"); };
  for (const auto& l : cert.labels) s << l.id << " pd " << opt(l.pd_simple) << " " << opt(l.pd_standard) << "\n";
  s << "gldim " << opt(cert.gldim) << "\n";
  return s.str();
}

Outcome criterion13() {
  Outcome o;
  auto s2 = gr_chains(2);
  auto s3 = gr_chains(3);
  for (std::size_t k = 0; k < s2.chains.size(); ++k)
    o.require(signature(s2.chains[k]) == signature(s3.chains[k]), s2.names[k] + " differs between p=2 and p=3");
  if (o.pass) o.detail = std::to_string(s2.chains.size()) + " chains identical at p=2 and p=3";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"easy example lambda=(1,1)", criterion1},
      {"lambda=(1,2) example", criterion2},
      {"lambda=(2,1) example", criterion3},
      {"Lambda_2 generator-cogenerator family", criterion4},
      {"GR chains are rejective", criterion5},
      {"Kronecker control", criterion6},
      {"pd and gldim bounds", criterion7},
      {"GR measure oracle", criterion8},
      {"measure property suite", criterion9},
      {"ADR bound", criterion10},
      {"Iyama chain", criterion11},
      {"generator-cogenerator finite gldim", criterion12},
      {"characteristic independence", criterion13},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::printf("[%s] %2zu %-40s %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
