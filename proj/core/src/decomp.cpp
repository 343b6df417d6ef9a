#include "grmlab/decomp.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <variant>

#include "grmlab/errors.hpp"

namespace grmlab {

std::uint64_t field_power(std::uint32_t p, std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / p) return std::numeric_limits<std::uint64_t>::max();
    r *= p;
  }
  return r;
}

VectorEnumerator::VectorEnumerator(PrimeField field, std::size_t n, std::uint64_t cap)
    : field_(field), v_(n, 0) {
  if (field_power(field.p(), n) > cap)
    throw SearchCapExceeded("enumeration of F_" + std::to_string(field.p()) + "^" + std::to_string(n) +
                            " exceeds the cap");
}

bool VectorEnumerator::next() {
  for (auto& x : v_) {
    if (++x < field_.p()) return true;
    x = 0;
  }
  return false;
}

namespace {

bool is_zero_vector(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](Scalar x) { return x == 0; });
}

void axpy(const PrimeField& f, Vector& acc, Scalar c, std::span<const Scalar> x) {
  if (c == 0) return;
  for (std::size_t k = 0; k < acc.size(); ++k) acc[k] = f.add(acc[k], f.mul(c, x[k]));
}

}  // namespace

// --- FDAlgebra ---------------------------------------------------------------

FDAlgebra::FDAlgebra(PrimeField field, std::size_t dim, std::vector<Vector> products, Vector one)
    : field_(field), dim_(dim), products_(std::move(products)), one_(std::move(one)) {
  if (products_.size() != dim_ * dim_ || one_.size() != dim_)
    throw DimensionMismatch("FDAlgebra: structure constants have the wrong size");
  for (const auto& p : products_)
    if (p.size() != dim_) throw DimensionMismatch("FDAlgebra: product vector has the wrong size");
}

Vector FDAlgebra::basis_vector(std::size_t i) const {
  Vector v(dim_, 0);
  v[i] = 1;
  return v;
}

Vector FDAlgebra::multiply(std::span<const Scalar> x, std::span<const Scalar> y) const {
  Vector acc(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      axpy(field_, acc, field_.mul(x[i], y[j]), product(i, j));
    }
  }
  return acc;
}

Matrix FDAlgebra::left_action(std::span<const Scalar> x) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vector col(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) axpy(field_, col, x[i], product(i, j));
    for (std::size_t r = 0; r < dim_; ++r) m(r, j) = col[r];
  }
  return m;
}

Vector FDAlgebra::power(std::span<const Scalar> x, std::uint64_t e) const {
  Vector result = one_;
  Vector base(x.begin(), x.end());
  while (e) {
    if (e & 1) result = multiply(result, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return result;
}

bool FDAlgebra::is_invertible(std::span<const Scalar> x) const { return rank(left_action(x)) == dim_; }

bool FDAlgebra::is_associative() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        auto l = multiply(product(i, j), basis_vector(k));
        auto r = multiply(basis_vector(i), product(j, k));
        if (l != r) return false;
      }
    }
  }
  return true;
}

bool FDAlgebra::has_identity() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    auto b = basis_vector(i);
    if (multiply(one_, b) != b || multiply(b, one_) != b) return false;
  }
  return true;
}

Subspace two_sided_ideal(const FDAlgebra& a, const Subspace& gens) {
  Subspace ideal(a.field(), a.dim());
  std::vector<Vector> work;
  for (std::size_t i = 0; i < gens.dim(); ++i) work.push_back(gens.basis_vector(i));
  while (!work.empty()) {
    Vector v = std::move(work.back());
    work.pop_back();
    auto r = ideal.reduce_vector(v);
    if (is_zero_vector(r)) continue;
    ideal = ideal.with(r);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      auto b = a.basis_vector(i);
      work.push_back(a.multiply(b, r));
      work.push_back(a.multiply(r, b));
    }
  }
  return ideal;
}

Subspace ideal_product(const FDAlgebra& a, const Subspace& i, const Subspace& j) {
  std::vector<Vector> vecs;
  for (std::size_t x = 0; x < i.dim(); ++x)
    for (std::size_t y = 0; y < j.dim(); ++y) vecs.push_back(a.multiply(i.basis().row(x), j.basis().row(y)));
  return Subspace::span(a.field(), a.dim(), vecs);
}

std::optional<std::size_t> nilpotency_index(const FDAlgebra& a, const Subspace& ideal) {
  Subspace p = ideal;
  std::size_t k = 1;
  while (!p.is_zero()) {
    if (k > a.dim()) return std::nullopt;
    Subspace next = ideal_product(a, p, ideal);
    if (next == p) return std::nullopt;
    p = std::move(next);
    ++k;
  }
  return k;
}

EndomorphismAlgebra endomorphism_algebra(const Representation& m) {
  HomSpace hom = hom_space(m, m);
  const std::size_t d = hom.dim();
  auto basis = hom.basis();
  std::vector<Vector> products;
  products.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) products.push_back(hom.coordinates(compose(basis[i], basis[j])));
  Vector one = hom.coordinates(Morphism::identity(m));
  FDAlgebra alg(m.field(), d, std::move(products), std::move(one));
  return EndomorphismAlgebra{std::move(hom), std::move(alg)};
}

// --- Fitting splits and locality -------------------------------------------------

std::optional<FittingSplit> fitting_split(const Representation& m, const Morphism& f) {
  std::size_t n = 1;
  for (auto d : m.dims()) n = std::max(n, d);
  Morphism g = f;
  for (std::size_t e = 1; e < n; e *= 2) g = compose(g, g);
  Submodule k = kernel(m, g);
  if (k.is_zero()) return std::nullopt;
  Submodule i = image(m, g);
  if (i.is_zero()) return std::nullopt;
  return FittingSplit{std::move(k), std::move(i)};
}

namespace {

// Is A/I a division ring? Enumerates the quotient.
bool quotient_is_division(const FDAlgebra& a, const Subspace& ideal, const Caps& caps) {
  const std::size_t d = a.dim();
  auto qd = quotient_data(d, ideal);
  const std::size_t dq = qd.projection.rows();
  if (dq == 0) return false;
  VectorEnumerator en(a.field(), dq, caps.max_enum_field_power);
  std::vector<Vector> lifts;
  for (std::size_t j = 0; j < dq; ++j) lifts.push_back(qd.lift.column(j));
  while (en.next()) {
    Vector x = qd.lift * en.current();
    Matrix act(a.field(), dq, dq);
    for (std::size_t j = 0; j < dq; ++j) {
      auto col = qd.projection * a.multiply(x, lifts[j]);
      for (std::size_t r = 0; r < dq; ++r) act(r, j) = col[r];
    }
    if (rank(act) != dq) return false;
  }
  return true;
}

// Nilpotent ideal generated by b^(p^k) - b whose quotient is a division ring.
std::optional<LocalRadical> frobenius_certificate(const FDAlgebra& a, const Caps& caps) {
  const std::size_t d = a.dim();
  const auto& f = a.field();
  std::vector<Vector> powers;
  for (std::size_t i = 0; i < d; ++i) powers.push_back(a.basis_vector(i));
  for (std::size_t k = 1; k <= d; ++k) {
    if (field_power(f.p(), k) > caps.max_enum_field_power) break;
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < d; ++i) {
      powers[i] = a.power(powers[i], f.p());
      Vector g = powers[i];
      g[i] = f.sub(g[i], 1);
      gens.push_back(std::move(g));
    }
    Subspace ideal = two_sided_ideal(a, Subspace::span(f, d, gens));
    if (ideal.dim() == d) continue;
    if (field_power(f.p(), d - ideal.dim()) > caps.max_enum_field_power) continue;
    if (!nilpotency_index(a, ideal)) continue;
    if (quotient_is_division(a, ideal, caps)) return LocalRadical{ideal, d - ideal.dim()};
  }
  return std::nullopt;
}

// Exhaustive scan: either an element that is neither nilpotent nor invertible,
// or the radical (the set of non-invertible elements, which must be a subspace).
std::variant<Vector, LocalRadical> exhaustive_scan(const FDAlgebra& a, const Caps& caps) {
  const std::size_t d = a.dim();
  VectorEnumerator en(a.field(), d, caps.max_enum_field_power);
  std::vector<Vector> singular;
  std::uint64_t singular_count = 0;
  while (en.next()) {
    const auto& x = en.current();
    if (a.is_invertible(x)) continue;
    if (!is_zero_vector(a.power(x, d))) return x;
    ++singular_count;
    singular.push_back(x);
  }
  ++singular_count;  // zero
  Subspace span = Subspace::span(a.field(), d, singular);
  if (field_power(a.field().p(), span.dim()) != singular_count || span.dim() == d)
    throw CheckFailure("non-invertible elements are nilpotent but do not form a proper subspace");
  return LocalRadical{span, d - span.dim()};
}

}  // namespace

LocalRadical local_radical(const EndomorphismAlgebra& end, const Caps& caps) {
  const auto& a = end.algebra;
  if (a.dim() == 0) throw NotLocal("the zero module has no local endomorphism ring");
  if (a.dim() == 1) return LocalRadical{Subspace(a.field(), 1), 1};
  if (auto cert = frobenius_certificate(a, caps)) return *cert;
  if (field_power(a.field().p(), a.dim()) > caps.max_enum_field_power)
    throw SearchCapExceeded("locality certificate not found within the enumeration cap");
  auto scan = exhaustive_scan(a, caps);
  if (std::holds_alternative<Vector>(scan)) throw NotLocal("endomorphism ring has a non-trivial idempotent");
  return std::get<LocalRadical>(scan);
}

LocalRadical local_radical(const Representation& m, const Caps& caps) {
  return local_radical(endomorphism_algebra(m), caps);
}

// --- Decomposition ---------------------------------------------------------------

namespace {

struct Leaf {
  Restriction restriction;
  LocalRadical radical;
};

using SplitOrLocal = std::variant<FittingSplit, LocalRadical>;

SplitOrLocal analyze(const Representation& m, const EndomorphismAlgebra& end, const Caps& caps,
                     std::mt19937_64& rng) {
  const auto& a = end.algebra;
  const auto& f = a.field();
  const std::size_t d = a.dim();
  if (d == 1) return LocalRadical{Subspace(f, 1), 1};

  const std::uint32_t shift_count = std::min<std::uint32_t>(f.p(), 64);
  auto try_element = [&](const Vector& x) -> std::optional<FittingSplit> {
    for (std::uint32_t c = 0; c < shift_count; ++c) {
      Vector y = x;
      for (std::size_t k = 0; k < d; ++k) y[k] = f.sub(y[k], f.mul(c, a.one()[k]));
      if (auto s = fitting_split(m, end.hom.combine(y))) return s;
    }
    return std::nullopt;
  };

  for (std::size_t i = 0; i < d; ++i)
    if (auto s = try_element(a.basis_vector(i))) return *s;

  if (auto cert = frobenius_certificate(a, caps)) return *cert;

  std::uniform_int_distribution<std::uint32_t> dist(0, f.p() - 1);
  for (std::size_t attempt = 0; attempt < caps.random_attempts; ++attempt) {
    Vector x(d);
    for (auto& v : x) v = dist(rng);
    if (auto s = try_element(x)) return *s;
  }

  if (field_power(f.p(), d) > caps.max_enum_field_power)
    throw SearchCapExceeded("decomposition search exhausted random attempts under the enumeration cap");
  auto scan = exhaustive_scan(a, caps);
  if (std::holds_alternative<LocalRadical>(scan)) return std::get<LocalRadical>(scan);
  auto s = fitting_split(m, end.hom.combine(std::get<Vector>(scan)));
  if (!s) throw CheckFailure("exhaustive scan returned an element without a Fitting split");
  return *s;
}

void split_recursive(const Representation& m, const Submodule& u, const Caps& caps, std::mt19937_64& rng,
                     std::vector<Leaf>& out) {
  Restriction r = restrict_to(m, u);
  auto end = endomorphism_algebra(r.module);
  auto outcome = analyze(r.module, end, caps, rng);
  if (auto* rad = std::get_if<LocalRadical>(&outcome)) {
    out.push_back(Leaf{std::move(r), std::move(*rad)});
    return;
  }
  const auto& s = std::get<FittingSplit>(outcome);
  split_recursive(m, image_of(m, r.inclusion, s.kernel_part), caps, rng, out);
  split_recursive(m, image_of(m, r.inclusion, s.image_part), caps, rng, out);
}

}  // namespace

std::size_t Decomposition::summand_count() const {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.multiplicity;
  return n;
}

Decomposition decompose(const Representation& m, const Caps& caps) {
  Decomposition out{m, {}};
  if (m.is_zero()) return out;
  std::mt19937_64 rng(caps.seed);
  std::vector<Leaf> leaves;
  split_recursive(m, Submodule::whole(m), caps, rng, leaves);

  std::size_t total = 0;
  for (auto& leaf : leaves) {
    total += leaf.restriction.module.total_dim();
    bool placed = false;
    for (auto& part : out.parts) {
      if (auto iso = isomorphism_of_indecomposables(part.module, leaf.restriction.module)) {
        part.embeddings.push_back(compose(leaf.restriction.inclusion, *iso));
        ++part.multiplicity;
        placed = true;
        break;
      }
    }
    if (!placed) {
      DecompositionPart part{leaf.restriction.module, 1, {leaf.restriction.inclusion}, {}, leaf.radical};
      out.parts.push_back(std::move(part));
    }
  }
  if (total != m.total_dim()) throw CheckFailure("decomposition does not account for every dimension");

  // Projections from the inverse of the assembled embedding matrix.
  for (std::size_t v = 0; v < m.num_vertices(); ++v) {
    Matrix e(m.field(), m.dim(v), m.dim(v));
    std::size_t col = 0;
    for (const auto& part : out.parts) {
      for (const auto& emb : part.embeddings) {
        e.set_block(0, col, emb.blocks[v]);
        col += emb.blocks[v].cols();
      }
    }
    auto inv = inverse(e);
    if (!inv) throw CheckFailure("summand embeddings are not independent");
    std::size_t row = 0;
    for (auto& part : out.parts) {
      part.projections.resize(part.embeddings.size());
      for (auto& proj : part.projections) {
        const std::size_t k = part.module.dim(v);
        proj.blocks.push_back(inv->block(row, 0, k, m.dim(v)));
        row += k;
      }
    }
  }
  return out;
}

bool is_indecomposable(const Representation& m, const Caps& caps) {
  if (m.is_zero()) return false;
  auto end = endomorphism_algebra(m);
  std::mt19937_64 rng(caps.seed);
  return std::holds_alternative<LocalRadical>(analyze(m, end, caps, rng));
}

// --- Isomorphism --------------------------------------------------------------

Morphism inverse_morphism(const Morphism& f) {
  Morphism g;
  for (const auto& b : f.blocks) {
    auto inv = inverse(b);
    if (!inv) throw DimensionMismatch("inverse_morphism: not an isomorphism");
    g.blocks.push_back(std::move(*inv));
  }
  return g;
}

std::optional<Morphism> isomorphism_of_indecomposables(const Representation& y, const Representation& z) {
  check_same_algebra(y, z);
  if (y.dims() != z.dims()) return std::nullopt;
  if (y.is_zero()) return Morphism::identity(y);
  auto fs = hom_basis(y, z);
  if (fs.empty()) return std::nullopt;
  auto gs = hom_basis(z, y);
  for (const auto& f : fs)
    for (const auto& g : gs)
      if (is_isomorphism(compose(g, f))) return f;
  return std::nullopt;
}

std::optional<Morphism> is_isomorphic(const Representation& y, const Representation& z, const Caps& caps) {
  check_same_algebra(y, z);
  if (y.dims() != z.dims()) return std::nullopt;
  if (y.is_zero()) return Morphism::identity(y);
  if (hom_space(y, y).dim() != hom_space(z, z).dim() || hom_space(y, z).dim() != hom_space(z, y).dim())
    return std::nullopt;
  auto dy = decompose(y, caps);
  auto dz = decompose(z, caps);
  if (dy.parts.size() != dz.parts.size()) return std::nullopt;
  Morphism witness = Morphism::zero(y, z);
  std::vector<bool> used(dz.parts.size(), false);
  for (const auto& py : dy.parts) {
    bool matched = false;
    for (std::size_t j = 0; j < dz.parts.size(); ++j) {
      if (used[j] || dz.parts[j].multiplicity != py.multiplicity) continue;
      auto iso = isomorphism_of_indecomposables(py.module, dz.parts[j].module);
      if (!iso) continue;
      for (std::size_t k = 0; k < py.multiplicity; ++k)
        witness = witness + compose(dz.parts[j].embeddings[k], compose(*iso, py.projections[k]));
      used[j] = true;
      matched = true;
      break;
    }
    if (!matched) return std::nullopt;
  }
  return witness;
}

Fingerprint fingerprint(const Representation& m) {
  return Fingerprint{m.dims(), hom_space(m, m).dim(), top(m).module.dims(), socle(m).dims()};
}

std::optional<IsoRegistry::Match> IsoRegistry::find(const Representation& m) const {
  auto fp = fingerprint(m);
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    if (!(prints_[i] == fp)) continue;
    if (auto iso = isomorphism_of_indecomposables(reps_[i], m)) return Match{i, false, std::move(*iso)};
  }
  return std::nullopt;
}

IsoRegistry::Match IsoRegistry::find_or_insert(const Representation& m) {
  if (auto found = find(m)) return *found;
  reps_.push_back(m);
  prints_.push_back(fingerprint(m));
  return Match{reps_.size() - 1, true, Morphism::identity(m)};
}

// --- Blockwise radical ------------------------------------------------------------

Subspace algebra_radical(const FDAlgebra& a, const BlockStructure& bs) {
  const auto& f = a.field();
  const std::size_t d = a.dim();
  if (bs.blocks.empty()) {
    if (d <= 1) return Subspace(f, d);
    throw MalformedInput("algebra_radical: block data required for dimension > 1");
  }
  std::vector<Vector> vecs;
  std::size_t covered = 0;
  for (std::size_t b = 0; b < bs.blocks.size(); ++b) {
    const auto& blk = bs.blocks[b];
    covered += blk.size;
    auto place = [&](std::span<const Scalar> local) {
      Vector v(d, 0);
      for (std::size_t k = 0; k < blk.size; ++k) v[blk.offset + k] = local[k];
      vecs.push_back(std::move(v));
    };
    if (bs.iso_class[blk.source] != bs.iso_class[blk.target]) {
      for (std::size_t k = 0; k < blk.size; ++k) {
        Vector e(blk.size, 0);
        e[k] = 1;
        place(e);
      }
    } else if (blk.source == blk.target) {
      const auto& rad = bs.radicals[blk.source].radical;
      for (std::size_t k = 0; k < rad.dim(); ++k) place(rad.basis().row(k));
    } else {
      const auto& t = bs.transports[b];
      if (!t) throw MalformedInput("algebra_radical: missing transport for an isomorphic pair");
      auto qd = quotient_data(t->rows(), bs.radicals[blk.source].radical);
      auto ker = kernel_basis(qd.projection * *t);
      for (std::size_t k = 0; k < ker.dim(); ++k) place(ker.basis().row(k));
    }
  }
  if (covered != d) throw MalformedInput("algebra_radical: blocks do not cover the basis");
  Subspace rad = Subspace::span(f, d, vecs);

  if (!(two_sided_ideal(a, rad) == rad)) throw CheckFailure("blockwise radical is not a two-sided ideal");
  if (!nilpotency_index(a, rad)) throw CheckFailure("blockwise radical is not nilpotent");
  // A/rad is a product of matrix rings M_m(D_c): dimension sum of m_c^2 dim D_c.
  std::vector<std::size_t> mult;
  std::vector<std::size_t> residue;
  for (std::size_t i = 0; i < bs.iso_class.size(); ++i) {
    auto c = bs.iso_class[i];
    if (c >= mult.size()) {
      mult.resize(c + 1, 0);
      residue.resize(c + 1, 0);
    }
    ++mult[c];
    residue[c] = bs.residue_dims[i];
  }
  std::size_t semisimple = 0;
  for (std::size_t c = 0; c < mult.size(); ++c) semisimple += mult[c] * mult[c] * residue[c];
  if (semisimple != d - rad.dim()) throw CheckFailure("quotient by the blockwise radical has the wrong dimension");
  return rad;
}

}  // namespace grmlab

namespace grmlab {

Vector BlockAlgebra::idempotent(std::size_t i) const { return embed(i, i, Morphism::identity(summands[i])); }

Vector BlockAlgebra::embed(std::size_t i, std::size_t j, const Morphism& f) const {
  Vector v(algebra.dim(), 0);
  auto c = hom(i, j).coordinates(f);
  const auto& blk = block(i, j);
  for (std::size_t k = 0; k < blk.size; ++k) v[blk.offset + k] = c[k];
  return v;
}

BlockAlgebra block_algebra(std::vector<Representation> summands, const Caps& caps) {
  if (summands.empty()) throw MalformedInput("block_algebra: no summands");
  const std::size_t n = summands.size();
  const auto& f = summands.front().field();
  std::vector<HomSpace> homs;
  BlockStructure bs;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      homs.push_back(hom_space(summands[i], summands[j]));
      bs.blocks.push_back({i, j, offset, homs.back().dim()});
      offset += homs.back().dim();
    }
  }
  const std::size_t d = offset;
  std::vector<std::vector<Morphism>> bases;
  for (const auto& h : homs) bases.push_back(h.basis());

  // Structure constants: x*y = x o y for y in Hom(M_i, M_j), x in Hom(M_j, M_k).
  std::vector<Vector> products(d * d, Vector(d, 0));
  std::vector<std::pair<std::size_t, std::size_t>> pos(d);
  for (const auto& blk : bs.blocks)
    for (std::size_t k = 0; k < blk.size; ++k) pos[blk.offset + k] = {blk.source * n + blk.target, k};
  for (std::size_t x = 0; x < d; ++x) {
    const auto& bx = bs.blocks[pos[x].first];
    for (std::size_t y = 0; y < d; ++y) {
      const auto& by = bs.blocks[pos[y].first];
      if (by.target != bx.source) continue;
      auto comp = compose(bases[pos[x].first][pos[x].second], bases[pos[y].first][pos[y].second]);
      const auto& target_hom = homs[by.source * n + bx.target];
      auto c = target_hom.coordinates(comp);
      const auto& tb = bs.blocks[by.source * n + bx.target];
      for (std::size_t k = 0; k < tb.size; ++k) products[x * d + y][tb.offset + k] = c[k];
    }
  }
  Vector one(d, 0);
  for (std::size_t i = 0; i < n; ++i) {
    auto c = homs[i * n + i].coordinates(Morphism::identity(summands[i]));
    const auto& blk = bs.blocks[i * n + i];
    for (std::size_t k = 0; k < blk.size; ++k) one[blk.offset + k] = c[k];
  }
  FDAlgebra alg(f, d, std::move(products), std::move(one));

  // Isomorphism classes, local radicals and transports.
  bs.iso_class.assign(n, 0);
  std::vector<std::size_t> class_rep;
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (std::size_t c = 0; c < class_rep.size() && !found; ++c) {
      if (isomorphism_of_indecomposables(summands[class_rep[c]], summands[i])) {
        bs.iso_class[i] = c;
        found = true;
      }
    }
    if (!found) {
      bs.iso_class[i] = class_rep.size();
      class_rep.push_back(i);
    }
    bs.radicals.push_back(local_radical(endomorphism_algebra(summands[i]), caps));
    bs.residue_dims.push_back(bs.radicals.back().residue_dim);
  }
  bs.transports.resize(bs.blocks.size());
  for (std::size_t b = 0; b < bs.blocks.size(); ++b) {
    const auto& blk = bs.blocks[b];
    if (blk.source == blk.target || bs.iso_class[blk.source] != bs.iso_class[blk.target]) continue;
    auto theta = isomorphism_of_indecomposables(summands[blk.target], summands[blk.source]);
    if (!theta) throw CheckFailure("block_algebra: isomorphism class without witness");
    const auto& end_hom = homs[blk.source * n + blk.source];
    Matrix t(f, end_hom.dim(), blk.size);
    for (std::size_t k = 0; k < blk.size; ++k) {
      auto c = end_hom.coordinates(compose(*theta, bases[b][k]));
      for (std::size_t r = 0; r < c.size(); ++r) t(r, k) = c[r];
    }
    bs.transports[b] = std::move(t);
  }
  Subspace rad = algebra_radical(alg, bs);
  return BlockAlgebra{std::move(summands), std::move(homs), std::move(alg), std::move(bs), std::move(rad)};
}

}  // namespace grmlab
