#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "grmlab/config.hpp"
#include "grmlab/module.hpp"

namespace grmlab {

/// A finite-dimensional associative algebra given by structure constants.
class FDAlgebra {
 public:
  /// products[i * dim + j] = coordinates of b_i * b_j.
  FDAlgebra(PrimeField field, std::size_t dim, std::vector<Vector> products, Vector one);

  const PrimeField& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Vector& product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }
  const Vector& one() const { return one_; }
  Vector basis_vector(std::size_t i) const;

  Vector multiply(std::span<const Scalar> x, std::span<const Scalar> y) const;
  /// Matrix of y -> x * y.
  Matrix left_action(std::span<const Scalar> x) const;
  Vector power(std::span<const Scalar> x, std::uint64_t e) const;
  bool is_invertible(std::span<const Scalar> x) const;
  bool is_associative() const;
  bool has_identity() const;

 private:
  PrimeField field_;
  std::size_t dim_;
  std::vector<Vector> products_;
  Vector one_;
};

/// A * gens * A.
Subspace two_sided_ideal(const FDAlgebra& a, const Subspace& gens);
/// Span of all products x*y, x in i, y in j.
Subspace ideal_product(const FDAlgebra& a, const Subspace& i, const Subspace& j);
/// Smallest k with I^k = 0, or nullopt when I is not nilpotent.
std::optional<std::size_t> nilpotency_index(const FDAlgebra& a, const Subspace& ideal);

/// End(M) with basis the canonical hom basis and product composition x*y = x o y.
struct EndomorphismAlgebra {
  HomSpace hom;
  FDAlgebra algebra;
};
EndomorphismAlgebra endomorphism_algebra(const Representation& m);

struct FittingSplit {
  Submodule kernel_part;
  Submodule image_part;
};
/// (ker f^n, im f^n) when both are nonzero.
std::optional<FittingSplit> fitting_split(const Representation& m, const Morphism& f);

struct LocalRadical {
  Subspace radical;         ///< in End(M) coordinates
  std::size_t residue_dim;  ///< dim End(M)/rad over F_p
};
/// Radical of a local endomorphism ring. Throws NotLocal when End(M) is not
/// local, SearchCapExceeded when no certificate is found within the caps.
LocalRadical local_radical(const EndomorphismAlgebra& end, const Caps& caps = {});
LocalRadical local_radical(const Representation& m, const Caps& caps = {});

struct DecompositionPart {
  Representation module;
  std::size_t multiplicity = 0;
  std::vector<Morphism> embeddings;   ///< part -> original, one per copy
  std::vector<Morphism> projections;  ///< original -> part, one per copy
  LocalRadical radical;
};

struct Decomposition {
  Representation original;
  std::vector<DecompositionPart> parts;

  std::size_t summand_count() const;
};

Decomposition decompose(const Representation& m, const Caps& caps = {});
bool is_indecomposable(const Representation& m, const Caps& caps = {});

/// Deterministic test for indecomposable modules: some g o f with f, g hom-basis
/// elements is invertible exactly when the two are isomorphic.
std::optional<Morphism> isomorphism_of_indecomposables(const Representation& y, const Representation& z);
/// General isomorphism test via decompositions; returns a witness y -> z.
std::optional<Morphism> is_isomorphic(const Representation& y, const Representation& z, const Caps& caps = {});
/// Vertexwise inverse of an isomorphism.
Morphism inverse_morphism(const Morphism& f);

/// Cheap isomorphism invariants used to prefilter comparisons.
struct Fingerprint {
  std::vector<std::size_t> dims;
  std::size_t end_dim = 0;
  std::vector<std::size_t> top_dims;
  std::vector<std::size_t> socle_dims;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};
Fingerprint fingerprint(const Representation& m);

/// Registry of isomorphism classes of indecomposables, in insertion order.
class IsoRegistry {
 public:
  struct Match {
    std::size_t index;
    bool inserted;
    Morphism iso;  ///< representative -> argument
  };
  Match find_or_insert(const Representation& m);
  std::optional<Match> find(const Representation& m) const;
  std::size_t size() const { return reps_.size(); }
  const Representation& representative(std::size_t i) const { return reps_[i]; }
  const std::vector<Representation>& representatives() const { return reps_; }

 private:
  std::vector<Representation> reps_;
  std::vector<Fingerprint> prints_;
};

/// Block data for an algebra End(M_1 + ... + M_n) of indecomposables.
struct BlockStructure {
  struct Block {
    std::size_t source;  ///< summand index i of Hom(M_i, M_j)
    std::size_t target;  ///< summand index j
    std::size_t offset;  ///< first basis index of the block
    std::size_t size;
  };
  std::vector<Block> blocks;
  std::vector<std::size_t> iso_class;     ///< per summand
  std::vector<LocalRadical> radicals;     ///< per summand, in End(M_i) coordinates
  /// For each block between isomorphic summands, the coordinates in End(M_source)
  /// of theta o f for the block's basis maps f, theta: M_target -> M_source a fixed iso.
  std::vector<std::optional<Matrix>> transports;
  std::vector<std::size_t> residue_dims;  ///< per summand
};

/// rad A assembled blockwise, verified nilpotent and with semisimple quotient of
/// the expected dimension. Block data is required above dimension 1.
Subspace algebra_radical(const FDAlgebra& a, const BlockStructure& blocks);

/// End(M_1 + ... + M_n) for indecomposable M_i, with basis the union of the
/// hom bases of the blocks Hom(M_i, M_j), ordered by (i, j). The product is
/// composition, so the block Hom(M_i, -) spans the left ideal of e_i.
struct BlockAlgebra {
  std::vector<Representation> summands;
  std::vector<HomSpace> homs;  ///< homs[i * n + j] = Hom(M_i, M_j)
  FDAlgebra algebra;
  BlockStructure blocks;
  Subspace radical;

  std::size_t num_summands() const { return summands.size(); }
  const HomSpace& hom(std::size_t i, std::size_t j) const { return homs[i * summands.size() + j]; }
  const BlockStructure::Block& block(std::size_t i, std::size_t j) const {
    return blocks.blocks[i * summands.size() + j];
  }
  /// Idempotent of summand i.
  Vector idempotent(std::size_t i) const;
  /// Global coordinates of f in Hom(M_i, M_j).
  Vector embed(std::size_t i, std::size_t j, const Morphism& f) const;
};
BlockAlgebra block_algebra(std::vector<Representation> summands, const Caps& caps = {});

/// All vectors of F_p^n in odometer order, with count p^n <= cap (throws otherwise).
class VectorEnumerator {
 public:
  VectorEnumerator(PrimeField field, std::size_t n, std::uint64_t cap);
  const Vector& current() const { return v_; }
  bool next();

 private:
  PrimeField field_;
  Vector v_;
};

/// p^n, saturating at UINT64_MAX.
std::uint64_t field_power(std::uint32_t p, std::size_t n);

}  // namespace grmlab
