#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "grmlab/field.hpp"
#include "grmlab/matrix.hpp"
#include "grmlab/quiver.hpp"

namespace grmlab {

/// A finite-dimensional left module over a bound quiver algebra, given as a
/// quiver representation: one vector space per vertex and, for every arrow
/// a: s -> t, a matrix of shape dim(t) x dim(s). Vectors are column vectors.
class Representation {
 public:
  /// Validates shapes and that every relation acts as zero.
  Representation(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> arrows);
  static Representation zero(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const { return algebra_; }
  const PrimeField& field() const { return algebra_->field(); }
  std::size_t num_vertices() const { return dims_.size(); }
  std::size_t dim(std::size_t v) const { return dims_[v]; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t total_dim() const { return total_; }
  bool is_zero() const { return total_ == 0; }
  const Matrix& arrow(std::size_t a) const { return arrows_[a]; }
  const std::vector<Matrix>& arrows() const { return arrows_; }

  /// Composite action of a path given by arrow indices, applied left to right.
  Matrix path_action(std::size_t source, std::span<const std::size_t> arrows) const;
  std::string dims_string() const;

 private:
  AlgebraPtr algebra_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> arrows_;
  std::size_t total_ = 0;
};

void check_same_algebra(const Representation& a, const Representation& b);

/// A module homomorphism stored as one matrix per vertex (dim target x dim
/// source). Composition order: (g o f)(x) = g(f(x)).
struct Morphism {
  std::vector<Matrix> blocks;

  static Morphism zero(const Representation& source, const Representation& target);
  static Morphism identity(const Representation& m);

  bool is_zero() const;
  Morphism operator+(const Morphism& o) const;
  Morphism operator-(const Morphism& o) const;
  Morphism scaled(Scalar s) const;
  friend bool operator==(const Morphism&, const Morphism&) = default;
};

/// g o f.
Morphism compose(const Morphism& g, const Morphism& f);
bool is_morphism(const Representation& source, const Representation& target, const Morphism& f);
bool is_isomorphism(const Morphism& f);
/// Row-major flattening, vertex by vertex.
Vector flatten(const Morphism& f);
Morphism unflatten(const Representation& source, const Representation& target, std::span<const Scalar> v);

/// Hom(source, target) with a canonical basis: the reduced echelon basis of the
/// solution space of the commuting conditions, in flattened coordinates.
class HomSpace {
 public:
  HomSpace(Representation source, Representation target, Subspace solutions);

  const Representation& source() const { return source_; }
  const Representation& target() const { return target_; }
  std::size_t dim() const { return solutions_.dim(); }
  const Subspace& solutions() const { return solutions_; }
  Morphism element(std::size_t i) const { return unflatten(source_, target_, solutions_.basis().row(i)); }
  std::vector<Morphism> basis() const;
  Morphism combine(std::span<const Scalar> coords) const;
  Vector coordinates(const Morphism& f) const { return solutions_.coordinates(flatten(f)); }
  /// Subspace of coefficient space spanned by the given morphisms.
  Subspace span_of(std::span<const Morphism> maps) const;

 private:
  Representation source_;
  Representation target_;
  Subspace solutions_;
};

HomSpace hom_space(const Representation& source, const Representation& target);
std::vector<Morphism> hom_basis(const Representation& source, const Representation& target);

/// One subspace per vertex, closed under all arrow maps.
struct Submodule {
  std::vector<Subspace> parts;

  static Submodule zero(const Representation& m);
  static Submodule whole(const Representation& m);
  std::size_t total_dim() const;
  std::vector<std::size_t> dims() const;
  bool is_zero() const { return total_dim() == 0; }
  bool contains(const Submodule& o) const;
  friend bool operator==(const Submodule& a, const Submodule& b) { return a.parts == b.parts; }
};

bool is_submodule(const Representation& m, const std::vector<Subspace>& parts);
Submodule sum(const Submodule& a, const Submodule& b);
Submodule meet(const Submodule& a, const Submodule& b);

struct VertexVector {
  std::size_t vertex = 0;
  Vector vector;
};
/// Smallest submodule containing the given vectors.
Submodule submodule_generated(const Representation& m, std::span<const VertexVector> vectors);

Submodule kernel(const Representation& source, const Morphism& f);
Submodule image(const Representation& target, const Morphism& f);
/// f(u) as a submodule of f's target.
Submodule image_of(const Representation& target, const Morphism& f, const Submodule& u);

struct Restriction {
  Representation module;
  Morphism inclusion;
};
/// The submodule u as a module in its own right, with coordinates taken with
/// respect to the echelon basis of each part.
Restriction restrict_to(const Representation& m, const Submodule& u);

struct QuotientModule {
  Representation module;
  Morphism projection;
  std::vector<Matrix> lift;  ///< vertexwise right inverses (linear, not module maps)
};
/// Throws NotSubmodule when u is not arrow-closed.
QuotientModule quotient(const Representation& m, const Submodule& u);

struct DirectSum {
  Representation module;
  std::vector<Morphism> injections;
  std::vector<Morphism> projections;
};
/// Requires a nonempty list over one algebra.
DirectSum direct_sum(std::span<const Representation> parts);

/// J*M, the span of images of all arrows.
Submodule radical(const Representation& m);
/// Common kernel of all arrows.
Submodule socle(const Representation& m);
QuotientModule top(const Representation& m);
/// J^k M.
Submodule radical_power(const Representation& m, std::size_t k);
/// Smallest k with J^k M = 0.
std::size_t loewy_length(const Representation& m);

/// Positive rational weight per vertex; lambda(M) = sum_v w_v dim M_v.
class LengthFunction {
 public:
  explicit LengthFunction(std::vector<Rational> weights);
  static LengthFunction unit(std::size_t num_vertices);

  const std::vector<Rational>& weights() const { return weights_; }
  Rational operator()(const std::vector<std::size_t>& dims) const;

 private:
  std::vector<Rational> weights_;
};

Rational weighted_length(const Representation& m, const LengthFunction& lambda);

/// The linear dual D(M), a module over `opposite_algebra` (which must be the
/// opposite presentation of M's algebra). Arrow matrices are transposed.
Representation dual(const Representation& m, AlgebraPtr opposite_algebra);
Morphism dual(const Morphism& f);

}  // namespace grmlab
