#include "grmlab/module.hpp"

#include <algorithm>
#include <sstream>

#include "grmlab/errors.hpp"

namespace grmlab {

Representation::Representation(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> arrows)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), arrows_(std::move(arrows)) {
  const auto& alg = *algebra_;
  if (dims_.size() != alg.num_vertices()) throw DimensionMismatch("one dimension per vertex required");
  if (arrows_.size() != alg.num_arrows()) throw DimensionMismatch("one matrix per arrow required");
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    const auto& ar = alg.arrow(a);
    if (arrows_[a].rows() != dims_[ar.target] || arrows_[a].cols() != dims_[ar.source])
      throw DimensionMismatch("arrow '" + ar.name + "' matrix has the wrong shape");
    if (!(arrows_[a].field() == alg.field())) throw DimensionMismatch("arrow matrix over the wrong field");
  }
  for (auto d : dims_) total_ += d;
  const auto& f = alg.field();
  for (const auto& rel : alg.spec().relations) {
    std::optional<Matrix> acc;
    for (const auto& term : rel) {
      std::vector<std::size_t> idx;
      for (const auto& name : term.path) idx.push_back(*alg.quiver().arrow_index(name));
      Matrix act = path_action(alg.arrow(idx.front()).source, idx).scaled(f.reduce(term.coeff));
      acc = acc ? *acc + act : act;
    }
    if (acc && !acc->is_zero()) throw MalformedInput("representation does not satisfy the relations");
  }
}

Representation Representation::zero(AlgebraPtr algebra) {
  const auto& alg = *algebra;
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < alg.num_arrows(); ++a) arrows.emplace_back(alg.field(), 0, 0);
  return Representation(algebra, std::vector<std::size_t>(alg.num_vertices(), 0), std::move(arrows));
}

Matrix Representation::path_action(std::size_t source, std::span<const std::size_t> arrows) const {
  Matrix acc = Matrix::identity(field(), dims_[source]);
  std::size_t at = source;
  for (auto a : arrows) {
    if (algebra_->arrow(a).source != at) throw MalformedInput("path_action: arrows not composable");
    acc = arrows_[a] * acc;
    at = algebra_->arrow(a).target;
  }
  return acc;
}

std::string Representation::dims_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t v = 0; v < dims_.size(); ++v) os << (v ? "," : "") << dims_[v];
  os << ')';
  return os.str();
}

void check_same_algebra(const Representation& a, const Representation& b) {
  if (!same_algebra(*a.algebra(), *b.algebra()))
    throw DimensionMismatch("modules over different algebras");
}

// --- Morphism ---------------------------------------------------------------

Morphism Morphism::zero(const Representation& source, const Representation& target) {
  Morphism f;
  for (std::size_t v = 0; v < source.num_vertices(); ++v)
    f.blocks.emplace_back(source.field(), target.dim(v), source.dim(v));
  return f;
}

Morphism Morphism::identity(const Representation& m) {
  Morphism f;
  for (std::size_t v = 0; v < m.num_vertices(); ++v) f.blocks.push_back(Matrix::identity(m.field(), m.dim(v)));
  return f;
}

bool Morphism::is_zero() const {
  return std::all_of(blocks.begin(), blocks.end(), [](const Matrix& b) { return b.is_zero(); });
}

Morphism Morphism::operator+(const Morphism& o) const {
  Morphism r;
  for (std::size_t v = 0; v < blocks.size(); ++v) r.blocks.push_back(blocks[v] + o.blocks[v]);
  return r;
}

Morphism Morphism::operator-(const Morphism& o) const {
  Morphism r;
  for (std::size_t v = 0; v < blocks.size(); ++v) r.blocks.push_back(blocks[v] - o.blocks[v]);
  return r;
}

Morphism Morphism::scaled(Scalar s) const {
  Morphism r;
  for (const auto& b : blocks) r.blocks.push_back(b.scaled(s));
  return r;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (g.blocks.size() != f.blocks.size()) throw DimensionMismatch("compose: vertex count mismatch");
  Morphism r;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) r.blocks.push_back(g.blocks[v] * f.blocks[v]);
  return r;
}

bool is_morphism(const Representation& source, const Representation& target, const Morphism& f) {
  if (f.blocks.size() != source.num_vertices()) return false;
  for (std::size_t v = 0; v < source.num_vertices(); ++v) {
    if (f.blocks[v].rows() != target.dim(v) || f.blocks[v].cols() != source.dim(v)) return false;
  }
  const auto& alg = *source.algebra();
  for (std::size_t a = 0; a < alg.num_arrows(); ++a) {
    const auto& ar = alg.arrow(a);
    if (!(target.arrow(a) * f.blocks[ar.source] == f.blocks[ar.target] * source.arrow(a))) return false;
  }
  return true;
}

bool is_isomorphism(const Morphism& f) {
  for (const auto& b : f.blocks) {
    if (b.rows() != b.cols() || rank(b) != b.rows()) return false;
  }
  return true;
}

Vector flatten(const Morphism& f) {
  Vector v;
  for (const auto& b : f.blocks) v.insert(v.end(), b.data().begin(), b.data().end());
  return v;
}

Morphism unflatten(const Representation& source, const Representation& target, std::span<const Scalar> v) {
  Morphism f;
  std::size_t off = 0;
  for (std::size_t x = 0; x < source.num_vertices(); ++x) {
    const std::size_t r = target.dim(x);
    const std::size_t c = source.dim(x);
    if (off + r * c > v.size()) throw DimensionMismatch("unflatten: vector too short");
    f.blocks.emplace_back(source.field(), r, c, std::vector<Scalar>(v.begin() + off, v.begin() + off + r * c));
    off += r * c;
  }
  if (off != v.size()) throw DimensionMismatch("unflatten: vector too long");
  return f;
}

// --- Hom spaces ---------------------------------------------------------------

HomSpace::HomSpace(Representation source, Representation target, Subspace solutions)
    : source_(std::move(source)), target_(std::move(target)), solutions_(std::move(solutions)) {}

std::vector<Morphism> HomSpace::basis() const {
  std::vector<Morphism> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(element(i));
  return out;
}

Morphism HomSpace::combine(std::span<const Scalar> coords) const {
  if (coords.size() != dim()) throw DimensionMismatch("HomSpace::combine: coordinate count");
  const auto& f = source_.field();
  Vector acc(solutions_.ambient_dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (coords[i] == 0) continue;
    auto row = solutions_.basis().row(i);
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] = f.add(acc[j], f.mul(coords[i], row[j]));
  }
  return unflatten(source_, target_, acc);
}

Subspace HomSpace::span_of(std::span<const Morphism> maps) const {
  std::vector<Vector> coords;
  for (const auto& m : maps) coords.push_back(coordinates(m));
  return Subspace::span(source_.field(), dim(), coords);
}

HomSpace hom_space(const Representation& source, const Representation& target) {
  check_same_algebra(source, target);
  const auto& alg = *source.algebra();
  const auto& f = source.field();
  const std::size_t nv = source.num_vertices();
  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + target.dim(v) * source.dim(v);
  const std::size_t unknowns = offset[nv];

  std::size_t eq_count = 0;
  for (std::size_t a = 0; a < alg.num_arrows(); ++a)
    eq_count += target.dim(alg.arrow(a).target) * source.dim(alg.arrow(a).source);
  Matrix eqs(f, eq_count, unknowns);
  std::size_t row = 0;
  for (std::size_t a = 0; a < alg.num_arrows(); ++a) {
    const auto s = alg.arrow(a).source;
    const auto t = alg.arrow(a).target;
    const Matrix& na = target.arrow(a);
    const Matrix& ma = source.arrow(a);
    // (N_a f_s - f_t M_a)[r][c] = 0
    for (std::size_t r = 0; r < target.dim(t); ++r) {
      for (std::size_t c = 0; c < source.dim(s); ++c, ++row) {
        for (std::size_t k = 0; k < target.dim(s); ++k) {
          auto col = offset[s] + k * source.dim(s) + c;
          eqs(row, col) = f.add(eqs(row, col), na(r, k));
        }
        for (std::size_t k = 0; k < source.dim(t); ++k) {
          auto col = offset[t] + r * source.dim(t) + k;
          eqs(row, col) = f.sub(eqs(row, col), ma(k, c));
        }
      }
    }
  }
  return HomSpace(source, target, kernel_basis(eqs));
}

std::vector<Morphism> hom_basis(const Representation& source, const Representation& target) {
  return hom_space(source, target).basis();
}

// --- Submodules ---------------------------------------------------------------

Submodule Submodule::zero(const Representation& m) {
  Submodule u;
  for (std::size_t v = 0; v < m.num_vertices(); ++v) u.parts.emplace_back(m.field(), m.dim(v));
  return u;
}

Submodule Submodule::whole(const Representation& m) {
  Submodule u;
  for (std::size_t v = 0; v < m.num_vertices(); ++v) u.parts.push_back(Subspace::full(m.field(), m.dim(v)));
  return u;
}

std::size_t Submodule::total_dim() const {
  std::size_t t = 0;
  for (const auto& p : parts) t += p.dim();
  return t;
}

std::vector<std::size_t> Submodule::dims() const {
  std::vector<std::size_t> d;
  for (const auto& p : parts) d.push_back(p.dim());
  return d;
}

bool Submodule::contains(const Submodule& o) const {
  for (std::size_t v = 0; v < parts.size(); ++v)
    if (!parts[v].contains(o.parts[v])) return false;
  return true;
}

bool is_submodule(const Representation& m, const std::vector<Subspace>& parts) {
  if (parts.size() != m.num_vertices()) return false;
  for (std::size_t v = 0; v < parts.size(); ++v)
    if (parts[v].ambient_dim() != m.dim(v)) return false;
  const auto& alg = *m.algebra();
  for (std::size_t a = 0; a < alg.num_arrows(); ++a) {
    const auto s = alg.arrow(a).source;
    const auto t = alg.arrow(a).target;
    for (std::size_t i = 0; i < parts[s].dim(); ++i) {
      if (!parts[t].contains(m.arrow(a) * parts[s].basis().row(i))) return false;
    }
  }
  return true;
}

Submodule sum(const Submodule& a, const Submodule& b) {
  Submodule r;
  for (std::size_t v = 0; v < a.parts.size(); ++v) r.parts.push_back(add(a.parts[v], b.parts[v]));
  return r;
}

Submodule meet(const Submodule& a, const Submodule& b) {
  Submodule r;
  for (std::size_t v = 0; v < a.parts.size(); ++v) r.parts.push_back(intersect(a.parts[v], b.parts[v]));
  return r;
}

Submodule submodule_generated(const Representation& m, std::span<const VertexVector> vectors) {
  Submodule u = Submodule::zero(m);
  const auto& alg = *m.algebra();
  std::vector<VertexVector> work(vectors.begin(), vectors.end());
  while (!work.empty()) {
    VertexVector item = std::move(work.back());
    work.pop_back();
    if (item.vertex >= m.num_vertices() || item.vector.size() != m.dim(item.vertex))
      throw DimensionMismatch("submodule_generated: vector does not fit its vertex");
    auto& part = u.parts[item.vertex];
    auto reduced = part.reduce_vector(item.vector);
    if (std::all_of(reduced.begin(), reduced.end(), [](Scalar x) { return x == 0; })) continue;
    part = part.with(reduced);
    for (std::size_t a = 0; a < alg.num_arrows(); ++a) {
      if (alg.arrow(a).source != item.vertex) continue;
      work.push_back({alg.arrow(a).target, m.arrow(a) * reduced});
    }
  }
  return u;
}

Submodule kernel(const Representation& source, const Morphism& f) {
  Submodule u;
  for (std::size_t v = 0; v < source.num_vertices(); ++v) u.parts.push_back(kernel_basis(f.blocks[v]));
  return u;
}

Submodule image(const Representation& target, const Morphism& f) {
  Submodule u;
  for (std::size_t v = 0; v < target.num_vertices(); ++v)
    u.parts.push_back(Subspace::column_space(f.blocks[v]));
  return u;
}

Submodule image_of(const Representation& target, const Morphism& f, const Submodule& u) {
  Submodule r;
  for (std::size_t v = 0; v < target.num_vertices(); ++v) {
    std::vector<Vector> vecs;
    for (std::size_t i = 0; i < u.parts[v].dim(); ++i) vecs.push_back(f.blocks[v] * u.parts[v].basis().row(i));
    r.parts.push_back(Subspace::span(target.field(), target.dim(v), vecs));
  }
  return r;
}

Restriction restrict_to(const Representation& m, const Submodule& u) {
  if (!is_submodule(m, u.parts)) throw NotSubmodule("restrict_to: not arrow-closed");
  const auto& alg = *m.algebra();
  const auto& f = m.field();
  std::vector<std::size_t> dims = u.dims();
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < alg.num_arrows(); ++a) {
    const auto s = alg.arrow(a).source;
    const auto t = alg.arrow(a).target;
    Matrix mat(f, dims[t], dims[s]);
    for (std::size_t j = 0; j < dims[s]; ++j) {
      auto c = u.parts[t].coordinates(m.arrow(a) * u.parts[s].basis().row(j));
      for (std::size_t i = 0; i < dims[t]; ++i) mat(i, j) = c[i];
    }
    arrows.push_back(std::move(mat));
  }
  Morphism inc;
  for (std::size_t v = 0; v < m.num_vertices(); ++v) inc.blocks.push_back(u.parts[v].basis().transpose());
  return Restriction{Representation(m.algebra(), std::move(dims), std::move(arrows)), std::move(inc)};
}

QuotientModule quotient(const Representation& m, const Submodule& u) {
  if (!is_submodule(m, u.parts)) throw NotSubmodule("quotient: not arrow-closed");
  const auto& alg = *m.algebra();
  std::vector<QuotientData> qd;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < m.num_vertices(); ++v) {
    qd.push_back(quotient_data(m.dim(v), u.parts[v]));
    dims.push_back(qd.back().projection.rows());
  }
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < alg.num_arrows(); ++a) {
    const auto s = alg.arrow(a).source;
    const auto t = alg.arrow(a).target;
    arrows.push_back(qd[t].projection * m.arrow(a) * qd[s].lift);
  }
  QuotientModule out{Representation(m.algebra(), std::move(dims), std::move(arrows)), {}, {}};
  for (auto& d : qd) {
    out.projection.blocks.push_back(std::move(d.projection));
    out.lift.push_back(std::move(d.lift));
  }
  return out;
}

DirectSum direct_sum(std::span<const Representation> parts) {
  if (parts.empty()) throw DimensionMismatch("direct_sum of an empty list");
  const auto& alg = *parts.front().algebra();
  for (const auto& p : parts) check_same_algebra(parts.front(), p);
  const auto& f = parts.front().field();
  const std::size_t nv = alg.num_vertices();
  std::vector<std::size_t> dims(nv, 0);
  std::vector<std::vector<std::size_t>> offset(parts.size(), std::vector<std::size_t>(nv, 0));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t v = 0; v < nv; ++v) {
      offset[i][v] = dims[v];
      dims[v] += parts[i].dim(v);
    }
  }
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < alg.num_arrows(); ++a) {
    const auto s = alg.arrow(a).source;
    const auto t = alg.arrow(a).target;
    Matrix mat(f, dims[t], dims[s]);
    for (std::size_t i = 0; i < parts.size(); ++i) mat.set_block(offset[i][t], offset[i][s], parts[i].arrow(a));
    arrows.push_back(std::move(mat));
  }
  DirectSum out{Representation(parts.front().algebra(), dims, std::move(arrows)), {}, {}};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Morphism inj, proj;
    for (std::size_t v = 0; v < nv; ++v) {
      Matrix in(f, dims[v], parts[i].dim(v));
      Matrix pr(f, parts[i].dim(v), dims[v]);
      for (std::size_t k = 0; k < parts[i].dim(v); ++k) {
        in(offset[i][v] + k, k) = 1;
        pr(k, offset[i][v] + k) = 1;
      }
      inj.blocks.push_back(std::move(in));
      proj.blocks.push_back(std::move(pr));
    }
    out.injections.push_back(std::move(inj));
    out.projections.push_back(std::move(proj));
  }
  return out;
}

namespace {

// J * u: span of arrow images of u.
Submodule arrow_images(const Representation& m, const Submodule& u) {
  const auto& alg = *m.algebra();
  std::vector<std::vector<Vector>> vecs(m.num_vertices());
  for (std::size_t a = 0; a < alg.num_arrows(); ++a) {
    const auto s = alg.arrow(a).source;
    const auto t = alg.arrow(a).target;
    for (std::size_t i = 0; i < u.parts[s].dim(); ++i) vecs[t].push_back(m.arrow(a) * u.parts[s].basis().row(i));
  }
  Submodule r;
  for (std::size_t v = 0; v < m.num_vertices(); ++v) r.parts.push_back(Subspace::span(m.field(), m.dim(v), vecs[v]));
  return r;
}

}  // namespace

Submodule radical(const Representation& m) { return arrow_images(m, Submodule::whole(m)); }

Submodule socle(const Representation& m) {
  const auto& alg = *m.algebra();
  Submodule r;
  for (std::size_t v = 0; v < m.num_vertices(); ++v) {
    std::size_t rows = 0;
    for (std::size_t a = 0; a < alg.num_arrows(); ++a)
      if (alg.arrow(a).source == v) rows += m.arrow(a).rows();
    Matrix stacked(m.field(), rows, m.dim(v));
    std::size_t r0 = 0;
    for (std::size_t a = 0; a < alg.num_arrows(); ++a) {
      if (alg.arrow(a).source != v) continue;
      stacked.set_block(r0, 0, m.arrow(a));
      r0 += m.arrow(a).rows();
    }
    r.parts.push_back(kernel_basis(stacked));
  }
  return r;
}

QuotientModule top(const Representation& m) { return quotient(m, radical(m)); }

Submodule radical_power(const Representation& m, std::size_t k) {
  Submodule u = Submodule::whole(m);
  for (std::size_t i = 0; i < k && !u.is_zero(); ++i) u = arrow_images(m, u);
  return u;
}

std::size_t loewy_length(const Representation& m) {
  Submodule u = Submodule::whole(m);
  std::size_t k = 0;
  while (!u.is_zero()) {
    u = arrow_images(m, u);
    ++k;
  }
  return k;
}

// --- Length functions ----------------------------------------------------------

LengthFunction::LengthFunction(std::vector<Rational> weights) : weights_(std::move(weights)) {
  for (const auto& w : weights_)
    if (w <= Rational(0)) throw MalformedInput("length function weights must be positive");
}

LengthFunction LengthFunction::unit(std::size_t num_vertices) {
  return LengthFunction(std::vector<Rational>(num_vertices, Rational(1)));
}

Rational LengthFunction::operator()(const std::vector<std::size_t>& dims) const {
  if (dims.size() != weights_.size()) throw DimensionMismatch("length function: vertex count mismatch");
  Rational total(0);
  for (std::size_t v = 0; v < dims.size(); ++v) total += weights_[v] * Rational(static_cast<std::int64_t>(dims[v]));
  return total;
}

Rational weighted_length(const Representation& m, const LengthFunction& lambda) { return lambda(m.dims()); }

// --- Duality --------------------------------------------------------------------

Representation dual(const Representation& m, AlgebraPtr opposite_algebra) {
  if (!is_opposite(*m.algebra(), *opposite_algebra))
    throw DimensionMismatch("dual: target algebra is not the opposite presentation");
  std::vector<Matrix> arrows;
  for (const auto& a : m.arrows()) arrows.push_back(a.transpose());
  return Representation(std::move(opposite_algebra), m.dims(), std::move(arrows));
}

Morphism dual(const Morphism& f) {
  Morphism d;
  for (const auto& b : f.blocks) d.blocks.push_back(b.transpose());
  return d;
}

}  // namespace grmlab
