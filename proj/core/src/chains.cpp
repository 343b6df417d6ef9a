#include "grmlab/chains.hpp"

#include <algorithm>

#include "grmlab/errors.hpp"
#include "grmlab/standard.hpp"
#include "grmlab/sublattice.hpp"

namespace grmlab {

std::string to_string(ChainKind k) {
  switch (k) {
    case ChainKind::GR: return "gr";
    case ChainKind::Iyama: return "iyama";
    case ChainKind::ADR: return "adr";
    case ChainKind::Custom: return "custom";
  }
  return "custom";
}

ChainKind parse_chain_kind(const std::string& s) {
  if (s == "gr") return ChainKind::GR;
  if (s == "iyama") return ChainKind::Iyama;
  if (s == "adr") return ChainKind::ADR;
  if (s == "custom") return ChainKind::Custom;
  throw MalformedInput("unknown chain kind '" + s + "'");
}

std::vector<std::size_t> RejectiveChain::members_of(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < phi.size(); ++k)
    if (phi[k].level >= i) out.push_back(k);
  return out;
}

void compute_phi(RejectiveChain& chain, const Caps& caps) {
  IsoRegistry reg;
  std::vector<PhiEntry> phi;
  for (std::size_t j = 0; j < chain.steps.size(); ++j) {
    auto d = decompose(chain.steps[j], caps);
    for (const auto& part : d.parts) {
      auto match = reg.find_or_insert(part.module);
      if (match.inserted) phi.push_back(PhiEntry{"Y" + std::to_string(phi.size() + 1), part.module, 0, 0, {}});
      auto& e = phi[match.index];
      e.level = j + 1;
      e.multiplicity += part.multiplicity;
    }
  }
  if (chain.kind == ChainKind::GR && chain.lambda) {
    for (auto& e : phi) {
      e.measure = gr_measure(e.module, *chain.lambda, caps).value;
      if (!(*e.measure == chain.measures.at(e.level - 1)))
        throw CheckFailure("level of " + e.id + " disagrees with its measure");
    }
  }
  chain.phi = std::move(phi);
}

RejectiveChain chain_from_steps(AlgebraPtr algebra, std::vector<Representation> steps, ChainKind kind,
                                const Caps& caps) {
  RejectiveChain c;
  c.algebra = std::move(algebra);
  c.kind = kind;
  for (auto& s : steps) {
    check_same_algebra(s, Representation::zero(c.algebra));
    if (s.is_zero()) throw MalformedInput("chain steps must be nonzero");
    c.steps.push_back(std::move(s));
  }
  compute_phi(c, caps);
  return c;
}

Submodule trace(const std::vector<Representation>& generators, const Representation& m) {
  Submodule u = Submodule::zero(m);
  for (const auto& t : generators) {
    check_same_algebra(t, m);
    for (const auto& f : hom_basis(t, m)) u = sum(u, image(m, f));
  }
  return u;
}

Submodule reject(const Representation& m, const std::vector<Representation>& cogenerators) {
  Submodule u = Submodule::whole(m);
  for (const auto& t : cogenerators) {
    check_same_algebra(m, t);
    for (const auto& f : hom_basis(m, t)) u = meet(u, kernel(m, f));
  }
  return u;
}

RejectResult reject_below(const Representation& m, const MeasureValue& bound, const LengthFunction& lambda,
                          const Caps& caps) {
  if (m.is_zero()) {
    auto z = Submodule::zero(m);
    return {z, quotient(m, z)};
  }
  if (bound.empty()) throw MalformedInput("reject_below needs a nonempty bound");
  auto lat = all_submodules(m, caps);
  Submodule u = Submodule::whole(m);
  for (const auto& v : lat.nodes()) {
    if (v.contains(u)) continue;
    if (gr_measure(quotient(m, v).module, lambda, caps).value < bound) u = meet(u, v);
  }
  auto q = quotient(m, u);
  if (!(gr_measure(q.module, lambda, caps).value < bound)) throw CheckFailure("reject is not in its family");
  return {u, std::move(q)};
}

RejectiveChain gr_chain(const Representation& x, const LengthFunction& lambda, const Caps& caps,
                        bool summand_wise) {
  if (x.is_zero()) throw MalformedInput("gr_chain needs a nonzero module");
  RejectiveChain c;
  c.algebra = x.algebra();
  c.kind = ChainKind::GR;
  c.lambda = lambda;
  Representation cur = x;
  MeasureValue mu = gr_measure(cur, lambda, caps).value;
  while (true) {
    c.steps.push_back(cur);
    c.measures.push_back(mu);
    if (c.steps.size() > x.total_dim()) throw CheckFailure("gr_chain does not terminate");
    Representation next = Representation::zero(x.algebra());
    if (summand_wise) {
      std::vector<Representation> pieces;
      for (const auto& part : decompose(cur, caps).parts) {
        auto q = reject_below(part.module, mu, lambda, caps).quotient.module;
        if (q.is_zero()) continue;
        for (std::size_t k = 0; k < part.multiplicity; ++k) pieces.push_back(q);
      }
      if (!pieces.empty()) next = direct_sum(pieces).module;
    } else {
      next = reject_below(cur, mu, lambda, caps).quotient.module;
    }
    if (next.is_zero()) break;
    if (next.total_dim() >= cur.total_dim()) throw CheckFailure("gr_chain step is not a proper quotient");
    auto next_mu = gr_measure(next, lambda, caps).value;
    if (!(next_mu < mu)) throw CheckFailure("gr_chain measures do not decrease");
    cur = std::move(next);
    mu = std::move(next_mu);
  }
  compute_phi(c, caps);
  return c;
}

Submodule radical_endomorphism_image(const Representation& m, const Caps& caps) {
  Submodule total = Submodule::zero(m);
  if (m.is_zero()) return total;
  auto d = decompose(m, caps);
  for (std::size_t c = 0; c < d.parts.size(); ++c) {
    const auto& mc = d.parts[c].module;
    Submodule r = Submodule::zero(mc);
    for (std::size_t e = 0; e < d.parts.size(); ++e) {
      if (e == c) continue;
      for (const auto& g : hom_basis(d.parts[e].module, mc)) r = sum(r, image(mc, g));
    }
    auto end = endomorphism_algebra(mc);
    const auto& rad = d.parts[c].radical.radical;
    for (std::size_t k = 0; k < rad.dim(); ++k) r = sum(r, image(mc, end.hom.combine(rad.basis().row(k))));
    for (const auto& emb : d.parts[c].embeddings) total = sum(total, image_of(m, emb, r));
  }
  return total;
}

RejectiveChain iyama_chain(const Representation& x, const Caps& caps) {
  if (x.is_zero()) throw MalformedInput("iyama_chain needs a nonzero module");
  RejectiveChain c;
  c.algebra = x.algebra();
  c.kind = ChainKind::Iyama;
  Representation cur = x;
  while (!cur.is_zero()) {
    c.steps.push_back(cur);
    auto r = radical_endomorphism_image(cur, caps);
    if (r.total_dim() >= cur.total_dim()) throw CheckFailure("radical image is not proper");
    cur = restrict_to(cur, r).module;
  }
  compute_phi(c, caps);
  return c;
}

RejectiveChain adr_chain(const AlgebraPtr& algebra, const Caps& caps) {
  auto reg = regular(algebra);
  const std::size_t ll = loewy_length(reg);
  std::vector<Representation> tops;
  for (std::size_t j = 1; j <= ll; ++j) tops.push_back(quotient(reg, radical_power(reg, j)).module);
  std::vector<Representation> steps;
  for (std::size_t i = 1; i <= ll; ++i)
    steps.push_back(direct_sum(std::span<const Representation>(tops.data(), ll - i + 1)).module);
  return chain_from_steps(algebra, std::move(steps), ChainKind::ADR, caps);
}

RejectiveChain dual_chain(const RejectiveChain& chain, const Caps& caps) {
  auto op = opposite(*chain.algebra);
  std::vector<Representation> steps;
  for (const auto& s : chain.steps) steps.push_back(dual(s, op));
  return chain_from_steps(op, std::move(steps), ChainKind::Custom, caps);
}

QuotientModule approximation(const RejectiveChain& chain, const Representation& y, std::size_t level,
                             const Caps& caps) {
  if (level <= 1) return quotient(y, Submodule::zero(y));
  if (level > chain.ell()) return quotient(y, Submodule::whole(y));
  if (chain.kind == ChainKind::GR && chain.lambda && chain.measures.size() == chain.ell())
    return reject_below(y, chain.measures[level - 2], *chain.lambda, caps).quotient;
  std::vector<Representation> cogens;
  for (auto k : chain.members_of(level)) cogens.push_back(chain.phi[k].module);
  return quotient(y, reject(y, cogens));
}

namespace {

/// Dimension of the image of Hom(Y', Z) -> Hom(Y, Z), h -> h o pi, and whether
/// that image contains the given subspace of Hom(Y, Z) coordinates.
struct FactorImage {
  std::size_t dim = 0;
  std::size_t hom_dim = 0;
  Subspace space;
};

FactorImage factor_image(const QuotientModule& approx, const Representation& y, const Representation& z) {
  auto hz = hom_space(y, z);
  std::vector<Morphism> maps;
  for (const auto& h : hom_basis(approx.module, z)) maps.push_back(compose(h, approx.projection));
  auto sp = hz.span_of(maps);
  return {sp.dim(), hz.dim(), sp};
}

bool is_epic(const Morphism& f) {
  for (const auto& b : f.blocks)
    if (rank(b) != b.rows()) return false;
  return true;
}

std::optional<std::size_t> member_class(const RejectiveChain& chain, const Representation& m, std::size_t level) {
  for (auto k : chain.members_of(level))
    if (isomorphism_of_indecomposables(chain.phi[k].module, m)) return k;
  return std::nullopt;
}

}  // namespace

ChainVerdict verify_chain(const RejectiveChain& chain, const Caps& caps) {
  ChainVerdict out;
  const std::size_t ell = chain.ell();
  const std::size_t n = chain.phi.size();
  // approx[i][k]: approximation of phi[k] into C_i, i = 1 .. ell + 1.
  std::vector<std::vector<QuotientModule>> approx(ell + 2);
  std::vector<std::vector<bool>> usable(ell + 2, std::vector<bool>(n, true));
  for (std::size_t i = 1; i <= ell + 1; ++i)
    for (std::size_t k = 0; k < n; ++k) approx[i].push_back(approximation(chain, chain.phi[k].module, i, caps));

  for (std::size_t i = 1; i <= ell; ++i) {
    LevelVerdict lv;
    lv.level = i;
    if (i >= 2) {
      for (std::size_t k = 0; k < n; ++k) {
        const auto& y = chain.phi[k].module;
        const auto& q = approx[i][k];
        ApproximationCheck ac;
        ac.phi_index = k;
        ac.level = i;
        ac.target_dims = q.module.dims();
        ac.epic = is_epic(q.projection);
        ac.in_category = true;
        if (!q.module.is_zero()) {
          for (const auto& part : decompose(q.module, caps).parts)
            if (!member_class(chain, part.module, i)) ac.in_category = false;
        }
        ac.universal = true;
        for (auto mk : chain.members_of(i)) {
          auto fi = factor_image(q, y, chain.phi[mk].module);
          if (fi.dim != fi.hom_dim) {
            ac.universal = false;
            lv.witnesses.push_back("C_" + std::to_string(i) + ": a map " + chain.phi[k].id + " -> " +
                                   chain.phi[mk].id + " does not factor through the approximation");
          }
        }
        if (!ac.in_category)
          lv.witnesses.push_back("C_" + std::to_string(i) + ": approximation of " + chain.phi[k].id + " with dims " +
                                 q.module.dims_string() + " is not in C_" + std::to_string(i) + " (not applicable)");
        if (!ac.epic) lv.witnesses.push_back("C_" + std::to_string(i) + ": approximation of " + chain.phi[k].id + " is not epic");
        usable[i][k] = ac.in_category && ac.epic && ac.universal;
        lv.left_rejective = lv.left_rejective && usable[i][k];
        out.approximations.push_back(std::move(ac));
      }
    }
    // Factorization through C_{i+1}.
    const auto members = chain.members_of(i);
    for (auto yk : members) {
      const auto& y = chain.phi[yk].module;
      for (auto zk : members) {
        const auto& z = chain.phi[zk].module;
        auto fi = factor_image(approx[i + 1][yk], y, z);
        if (yk != zk) {
          if (fi.dim != fi.hom_dim) {
            lv.prerejective = false;
            lv.witnesses.push_back("level " + std::to_string(i) + ": a map " + chain.phi[yk].id + " -> " +
                                   chain.phi[zk].id + " does not factor through C_" + std::to_string(i + 1));
          }
        } else {
          auto rad = local_radical(y, caps).radical;
          if (!fi.space.contains(rad)) {
            lv.rejective = false;
            lv.witnesses.push_back("level " + std::to_string(i) + ": a radical endomorphism of " + chain.phi[yk].id +
                                   " does not factor through C_" + std::to_string(i + 1));
          }
        }
      }
    }
    lv.rejective = lv.rejective && lv.prerejective;
    out.left_rejective = out.left_rejective && lv.left_rejective;
    out.prerejective = out.prerejective && lv.prerejective;
    out.rejective = out.rejective && lv.rejective;
    out.levels.push_back(std::move(lv));
  }
  // Factorization is only meaningful through genuine approximations.
  out.prerejective = out.prerejective && out.left_rejective;
  out.rejective = out.rejective && out.prerejective;
  return out;
}

}  // namespace grmlab
