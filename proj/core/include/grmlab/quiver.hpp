#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grmlab/field.hpp"
#include "grmlab/matrix.hpp"

namespace grmlab {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  std::size_t vertex_index(std::string_view name) const;  ///< throws UnknownVertex
  std::optional<std::size_t> arrow_index(std::string_view name) const;
};

/// One term coeff * path of a relation. Paths list arrow names in order of
/// application: {"a", "b"} means first a, then b.
struct PathTerm {
  std::int64_t coeff = 1;
  std::vector<std::string> path;
};
using Relation = std::vector<PathTerm>;

struct AlgebraSpec {
  Quiver quiver;
  std::vector<Relation> relations;
  std::size_t nilpotency_bound = 1;
  std::uint32_t prime = 2;
};

/// A path in the quiver; trivial paths have no arrows and source == target.
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const { return arrows.size(); }
  friend auto operator<=>(const Path&, const Path&) = default;
};

/// kQ/I for an admissible ideal I, presented by residue paths. Every path of
/// length >= nilpotency_bound lies in I; the ideal is computed degreewise inside
/// the truncated path space.
class BoundQuiverAlgebra {
 public:
  const AlgebraSpec& spec() const { return spec_; }
  const Quiver& quiver() const { return spec_.quiver; }
  const PrimeField& field() const { return field_; }
  std::size_t num_vertices() const { return spec_.quiver.vertices.size(); }
  std::size_t num_arrows() const { return spec_.quiver.arrows.size(); }
  const Arrow& arrow(std::size_t a) const { return spec_.quiver.arrows[a]; }

  std::size_t dim() const { return basis_.size(); }
  const std::vector<Path>& basis() const { return basis_; }
  /// Indices of residue paths from s to t, in basis order.
  const std::vector<std::size_t>& basis_between(std::size_t s, std::size_t t) const {
    return by_endpoints_[s * num_vertices() + t];
  }
  /// Position of basis element i inside basis_between(source, target).
  std::size_t local_index(std::size_t i) const { return local_index_[i]; }

  /// Residue of a path as a coefficient vector over the basis.
  Vector reduce_path(const Path& path) const;
  Vector reduce_arrows(std::size_t source, std::span<const std::size_t> arrows) const;
  /// Coordinates of basis[i] * basis[j] (first i, then j).
  const Vector& multiply(std::size_t i, std::size_t j) const { return mult_[i * dim() + j]; }
  std::size_t trivial_path(std::size_t v) const { return trivial_[v]; }

  std::string path_name(const Path& p) const;
  std::string basis_name(std::size_t i) const { return path_name(basis_[i]); }

 private:
  friend std::shared_ptr<const BoundQuiverAlgebra> build_algebra(AlgebraSpec spec);
  explicit BoundQuiverAlgebra(AlgebraSpec spec);

  AlgebraSpec spec_;
  PrimeField field_;
  std::vector<Path> basis_;
  std::vector<std::vector<std::size_t>> by_endpoints_;
  std::vector<std::size_t> local_index_;
  std::vector<std::size_t> trivial_;
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, Vector> reduced_;
  std::vector<Vector> mult_;
};

using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

/// Throws AdmissibilityViolation, MalformedRelation, MalformedInput.
AlgebraPtr build_algebra(AlgebraSpec spec);

/// Reverses arrows and relation paths.
AlgebraSpec opposite_spec(const AlgebraSpec& spec);
AlgebraPtr opposite(const BoundQuiverAlgebra& alg);

/// Structural equality of presentations.
bool same_algebra(const BoundQuiverAlgebra& a, const BoundQuiverAlgebra& b);
/// True when b is the opposite presentation of a.
bool is_opposite(const BoundQuiverAlgebra& a, const BoundQuiverAlgebra& b);

}  // namespace grmlab
