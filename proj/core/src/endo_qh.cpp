#include "grmlab/endo_qh.hpp"

#include <algorithm>

#include "grmlab/errors.hpp"

namespace grmlab {

Subspace GammaAlgebra::left_ideal(std::size_t label) const {
  const std::size_t i = first_summand[label];
  std::vector<Vector> vs;
  for (std::size_t j = 0; j < blocks.num_summands(); ++j) {
    const auto& b = blocks.block(i, j);
    for (std::size_t k = 0; k < b.size; ++k) vs.push_back(algebra().basis_vector(b.offset + k));
  }
  return Subspace::span(algebra().field(), dim(), vs);
}

GammaAlgebra build_gamma(const RejectiveChain& chain, bool basic, const Caps& caps) {
  if (chain.phi.empty()) throw MalformedInput("build_gamma needs a chain with Phi computed");
  std::vector<Representation> summands;
  std::vector<std::size_t> cls, first;
  for (std::size_t k = 0; k < chain.phi.size(); ++k) {
    first.push_back(summands.size());
    const std::size_t copies = basic ? 1 : std::max<std::size_t>(1, chain.phi[k].multiplicity);
    for (std::size_t c = 0; c < copies; ++c) {
      summands.push_back(chain.phi[k].module);
      cls.push_back(k);
    }
  }
  GammaAlgebra g{block_algebra(std::move(summands), caps), std::move(cls), std::move(first), {}, {}};
  for (const auto& e : chain.phi) {
    g.labels.push_back(e.id);
    g.levels.push_back(e.level);
  }
  return g;
}

LabelPoset label_poset(const GammaAlgebra& gamma) { return LabelPoset{gamma.levels}; }

Matrix GammaModule::act(std::span<const Scalar> x) const {
  Matrix r(field, dim, dim);
  for (std::size_t b = 0; b < action.size(); ++b)
    if (x[b]) r = r + action[b].scaled(x[b]);
  return r;
}

bool is_gamma_module(const GammaAlgebra& gamma, const GammaModule& m) {
  const auto& a = gamma.algebra();
  if (m.action.size() != a.dim()) return false;
  if (!(m.act(a.one()) == Matrix::identity(m.field, m.dim))) return false;
  for (std::size_t b = 0; b < a.dim(); ++b)
    for (std::size_t c = 0; c < a.dim(); ++c)
      if (!(m.action[b] * m.action[c] == m.act(a.product(b, c)))) return false;
  return true;
}

GammaModule left_ideal_module(const GammaAlgebra& gamma, const Subspace& s) {
  const auto& a = gamma.algebra();
  GammaModule m{a.field(), s.dim(), {}};
  for (std::size_t b = 0; b < a.dim(); ++b) {
    Matrix act(a.field(), s.dim(), s.dim());
    for (std::size_t k = 0; k < s.dim(); ++k) {
      auto c = s.coordinates(a.multiply(a.basis_vector(b), s.basis().row(k)));
      for (std::size_t r = 0; r < s.dim(); ++r) act(r, k) = c[r];
    }
    m.action.push_back(std::move(act));
  }
  return m;
}

GammaModule gamma_projective(const GammaAlgebra& gamma, std::size_t label) {
  return left_ideal_module(gamma, gamma.left_ideal(label));
}

GammaModule restrict_module(const GammaModule& m, const Subspace& s) {
  GammaModule r{m.field, s.dim(), {}};
  for (const auto& a : m.action) {
    Matrix act(m.field, s.dim(), s.dim());
    for (std::size_t k = 0; k < s.dim(); ++k) {
      auto c = s.coordinates(a * s.basis().row(k));
      for (std::size_t i = 0; i < s.dim(); ++i) act(i, k) = c[i];
    }
    r.action.push_back(std::move(act));
  }
  return r;
}

GammaModule quotient_module(const GammaModule& m, const Subspace& s) {
  auto qd = quotient_data(m.dim, s);
  GammaModule r{m.field, m.dim - s.dim(), {}};
  for (const auto& a : m.action) r.action.push_back(qd.projection * a * qd.lift);
  return r;
}

GammaModule direct_sum(const std::vector<GammaModule>& parts) {
  if (parts.empty()) throw MalformedInput("direct sum of no Gamma-modules");
  std::size_t n = 0;
  for (const auto& p : parts) n += p.dim;
  GammaModule r{parts.front().field, n, {}};
  for (std::size_t b = 0; b < parts.front().action.size(); ++b) {
    Matrix act(r.field, n, n);
    std::size_t off = 0;
    for (const auto& p : parts) {
      act.set_block(off, off, p.action[b]);
      off += p.dim;
    }
    r.action.push_back(std::move(act));
  }
  return r;
}

Subspace generated(const GammaModule& m, std::span<const Vector> vectors) {
  std::vector<Vector> out;
  for (const auto& v : vectors)
    for (const auto& a : m.action) out.push_back(a * v);
  return Subspace::span(m.field, m.dim, out);
}

Subspace module_radical(const GammaAlgebra& gamma, const GammaModule& m) {
  const auto& rad = gamma.blocks.radical;
  std::vector<Vector> cols;
  for (std::size_t k = 0; k < rad.dim(); ++k) {
    auto a = m.act(rad.basis().row(k));
    for (std::size_t c = 0; c < m.dim; ++c) cols.push_back(a.column(c));
  }
  return Subspace::span(m.field, m.dim, cols);
}

GammaModule gamma_simple(const GammaAlgebra& gamma, std::size_t label) {
  auto p = gamma_projective(gamma, label);
  return quotient_module(p, module_radical(gamma, p));
}

namespace {

Subspace local_coordinates(const Subspace& ambient, const Subspace& s) {
  std::vector<Vector> vs;
  for (std::size_t k = 0; k < s.dim(); ++k) vs.push_back(ambient.coordinates(s.basis().row(k)));
  return Subspace::span(ambient.field(), ambient.dim(), vs);
}

TraceU trace_parts(const GammaAlgebra& gamma, const RejectiveChain& chain, std::size_t label, const Caps& caps) {
  const auto& a = gamma.algebra();
  const auto& bl = gamma.blocks;
  const auto poset = label_poset(gamma);
  const std::size_t i = gamma.first_summand[label];
  std::vector<Vector> gens;
  for (std::size_t j = 0; j < bl.num_summands(); ++j) {
    if (poset.less_equal(gamma.summand_class[j], label)) continue;
    const auto& b = bl.block(i, j);
    for (std::size_t k = 0; k < b.size; ++k) gens.push_back(a.basis_vector(b.offset + k));
  }
  std::vector<Vector> prods;
  for (const auto& g : gens)
    for (std::size_t b = 0; b < a.dim(); ++b) prods.push_back(a.multiply(a.basis_vector(b), g));
  TraceU out{Subspace::span(a.field(), a.dim(), prods), Subspace(a.field(), a.dim())};

  const auto& y = chain.phi.at(label).module;
  auto pi = approximation(chain, y, chain.phi[label].level + 1, caps);
  std::vector<Vector> img;
  for (std::size_t j = 0; j < bl.num_summands(); ++j)
    for (const auto& h : hom_basis(pi.module, bl.summands[j])) img.push_back(bl.embed(i, j, compose(h, pi.projection)));
  out.approximation = Subspace::span(a.field(), a.dim(), img);
  return out;
}

}  // namespace

TraceU trace_U(const GammaAlgebra& gamma, const RejectiveChain& chain, std::size_t label, const Caps& caps) {
  auto t = trace_parts(gamma, chain, label, caps);
  if (!(t.trace == t.approximation))
    throw CheckFailure("trace U_" + gamma.labels[label] + " differs from the approximation image");
  return t;
}

GammaModule standard_module(const GammaAlgebra& gamma, const RejectiveChain& chain, std::size_t label,
                            const Caps& caps) {
  auto py = gamma.left_ideal(label);
  auto t = trace_U(gamma, chain, label, caps);
  return quotient_module(left_ideal_module(gamma, py), local_coordinates(py, t.trace));
}

ProjectiveCover projective_cover(const GammaAlgebra& gamma, const GammaModule& m) {
  ProjectiveCover out{{}, GammaModule{m.field, 0, {}}, Matrix(m.field, m.dim, 0), Subspace(m.field, 0)};
  Subspace reached = module_radical(gamma, m);
  std::vector<Vector> gens;
  for (std::size_t y = 0; y < gamma.num_labels() && !reached.is_full(); ++y) {
    auto ey = Subspace::column_space(m.act(gamma.idempotent(y)));
    for (std::size_t k = 0; k < ey.dim(); ++k) {
      auto v = ey.basis_vector(k);
      if (reached.contains(v)) continue;
      out.labels.push_back(y);
      gens.push_back(v);
      reached = add(reached, generated(m, std::span<const Vector>(&gens.back(), 1)));
    }
  }
  if (!reached.is_full()) throw CheckFailure("projective cover generators do not generate");
  std::vector<GammaModule> parts;
  std::vector<Matrix> cols;
  std::size_t total = 0;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    auto ideal = gamma.left_ideal(out.labels[k]);
    parts.push_back(left_ideal_module(gamma, ideal));
    Matrix c(m.field, m.dim, ideal.dim());
    for (std::size_t s = 0; s < ideal.dim(); ++s) {
      auto col = m.act(ideal.basis().row(s)) * gens[k];
      for (std::size_t r = 0; r < m.dim; ++r) c(r, s) = col[r];
    }
    total += ideal.dim();
    cols.push_back(std::move(c));
  }
  out.map = Matrix(m.field, m.dim, total);
  std::size_t off = 0;
  for (const auto& c : cols) {
    out.map.set_block(0, off, c);
    off += c.cols();
  }
  out.projective = parts.empty() ? GammaModule{m.field, 0, std::vector<Matrix>(gamma.dim(), Matrix(m.field, 0, 0))}
                                 : direct_sum(parts);
  out.kernel = kernel_basis(out.map);
  return out;
}

std::optional<std::size_t> proj_dimension(const GammaAlgebra& gamma, const GammaModule& m, std::size_t cap) {
  GammaModule cur = m;
  for (std::size_t n = 0;; ++n) {
    if (cur.is_zero()) return 0;
    auto cover = projective_cover(gamma, cur);
    if (cover.kernel.is_zero()) return n;
    if (n >= cap) return std::nullopt;
    cur = restrict_module(cover.projective, cover.kernel);
  }
}

QHCertificate certify(const RejectiveChain& chain, const Caps& caps, bool basic) {
  if (chain.kind == ChainKind::Iyama) {
    auto cert = certify(dual_chain(chain, caps), caps, basic);
    cert.dualized = true;
    return cert;
  }
  QHCertificate cert;
  cert.ell = chain.ell();
  cert.basic = basic;
  auto gamma = build_gamma(chain, basic, caps);
  cert.gamma_dim = gamma.dim();
  bool all = true;
  std::optional<std::size_t> gl = 0;
  for (std::size_t y = 0; y < gamma.num_labels(); ++y) {
    LabelCertificate lc;
    lc.id = gamma.labels[y];
    lc.level = gamma.levels[y];
    lc.multiplicity = chain.phi[y].multiplicity;
    const std::size_t cap = caps.pd_cap ? caps.pd_cap : chain.ell() + gamma.dim();

    auto t = trace_parts(gamma, chain, y, caps);
    lc.trace_agrees = t.trace == t.approximation;
    if (!lc.trace_agrees) cert.witnesses.push_back(lc.id + ": trace differs from the approximation image");
    lc.u_dim = t.trace.dim();

    // (a) U_Y is a sum of projectives of strictly higher level.
    if (t.trace.is_zero()) {
      lc.check_a = true;
    } else {
      auto cover = projective_cover(gamma, left_ideal_module(gamma, t.trace));
      lc.check_a = cover.kernel.is_zero();
      for (auto z : cover.labels) {
        lc.u_decomposition.push_back(gamma.labels[z]);
        if (gamma.levels[z] <= lc.level) lc.check_a = false;
      }
      if (!lc.check_a) cert.witnesses.push_back(lc.id + ": U is not a sum of higher projectives");
    }

    auto py = gamma.left_ideal(y);
    auto delta = quotient_module(left_ideal_module(gamma, py), local_coordinates(py, t.trace));
    lc.standard_dim = delta.dim;
    // (b) e_Y rad(Delta) = 0 and e_Y Delta is one copy of the division ring.
    auto ey = delta.act(gamma.idempotent(y));
    auto rd = module_radical(gamma, delta);
    bool kills = true;
    for (std::size_t k = 0; k < rd.dim(); ++k) {
      auto w = ey * rd.basis().row(k);
      if (std::any_of(w.begin(), w.end(), [](Scalar s) { return s != 0; })) kills = false;
    }
    lc.check_b = kills && rank(ey) == gamma.residue_dim(y);
    if (!lc.check_b) cert.witnesses.push_back(lc.id + ": a nonzero map P -> Delta is not epic");

    lc.pd_standard = proj_dimension(gamma, delta, cap);
    lc.strong = lc.pd_standard && *lc.pd_standard <= 1;
    if (!lc.strong) cert.witnesses.push_back(lc.id + ": pd of the standard module exceeds 1");

    lc.pd_simple = proj_dimension(gamma, gamma_simple(gamma, y), cap);
    lc.pd_bound = lc.pd_simple && *lc.pd_simple <= lc.level;
    if (!lc.pd_bound) cert.witnesses.push_back(lc.id + ": pd of the simple module exceeds its level");
    if (gl && lc.pd_simple)
      gl = std::max(*gl, *lc.pd_simple);
    else
      gl.reset();

    all = all && lc.trace_agrees && lc.check_a && lc.check_b && lc.strong && lc.pd_bound;
    cert.labels.push_back(std::move(lc));
  }
  cert.gldim = gl;
  cert.gldim_bound = gl && *gl <= cert.ell;
  if (!cert.gldim_bound) cert.witnesses.push_back("global dimension exceeds ell");
  cert.passed = all && cert.gldim_bound;
  return cert;
}

QHCertificate certify(const Representation& x, const LengthFunction& lambda, const Caps& caps) {
  return certify(gr_chain(x, lambda, caps), caps);
}

}  // namespace grmlab
