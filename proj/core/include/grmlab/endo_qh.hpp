#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "grmlab/chains.hpp"
#include "grmlab/config.hpp"
#include "grmlab/decomp.hpp"

namespace grmlab {

/// Gamma = End(X) for X the sum of the chain's Phi, with one summand per class
/// (basic) or each class repeated by its multiplicity.
struct GammaAlgebra {
  BlockAlgebra blocks;
  std::vector<std::size_t> summand_class;  ///< per summand, its label
  std::vector<std::size_t> first_summand;  ///< per label
  std::vector<std::string> labels;
  std::vector<std::size_t> levels;

  const FDAlgebra& algebra() const { return blocks.algebra; }
  std::size_t dim() const { return blocks.algebra.dim(); }
  std::size_t num_labels() const { return labels.size(); }
  Vector idempotent(std::size_t label) const { return blocks.idempotent(first_summand[label]); }
  std::size_t residue_dim(std::size_t label) const { return blocks.blocks.residue_dims[first_summand[label]]; }
  /// Span of the blocks Hom(M_i, -) for the first summand of the label: Gamma e_Y.
  Subspace left_ideal(std::size_t label) const;
};

GammaAlgebra build_gamma(const RejectiveChain& chain, bool basic = true, const Caps& caps = {});

/// Y < Z iff level(Y) < level(Z); equal-level labels are incomparable.
struct LabelPoset {
  std::vector<std::size_t> levels;
  bool less(std::size_t y, std::size_t z) const { return levels[y] < levels[z]; }
  bool less_equal(std::size_t y, std::size_t z) const { return y == z || less(y, z); }
};
LabelPoset label_poset(const GammaAlgebra& gamma);

/// A left Gamma-module: one action matrix per basis element of Gamma.
struct GammaModule {
  PrimeField field;
  std::size_t dim = 0;
  std::vector<Matrix> action;

  Matrix act(std::span<const Scalar> x) const;
  bool is_zero() const { return dim == 0; }
};

/// Checks that the action respects the structure constants and the identity.
bool is_gamma_module(const GammaAlgebra& gamma, const GammaModule& m);
/// A left ideal of Gamma with the regular action, in the echelon basis of s.
GammaModule left_ideal_module(const GammaAlgebra& gamma, const Subspace& s);
GammaModule gamma_projective(const GammaAlgebra& gamma, std::size_t label);
GammaModule gamma_simple(const GammaAlgebra& gamma, std::size_t label);
GammaModule restrict_module(const GammaModule& m, const Subspace& s);
GammaModule quotient_module(const GammaModule& m, const Subspace& s);
GammaModule direct_sum(const std::vector<GammaModule>& parts);
/// Gamma * vectors.
Subspace generated(const GammaModule& m, std::span<const Vector> vectors);
/// rad(Gamma) * M.
Subspace module_radical(const GammaAlgebra& gamma, const GammaModule& m);

struct TraceU {
  Subspace trace;          ///< U_Y in Gamma coordinates, inside Gamma e_Y
  Subspace approximation;  ///< image of Hom(pi, X) for the approximation pi of Y
};
/// U_Y = sum of the images of all maps P_Z -> P_Y with Z not below or equal to
/// Y. Throws CheckFailure when it differs from the image of Hom(pi, X), pi the
/// left approximation of Y into the next level.
TraceU trace_U(const GammaAlgebra& gamma, const RejectiveChain& chain, std::size_t label, const Caps& caps = {});

/// P_Y / U_Y.
GammaModule standard_module(const GammaAlgebra& gamma, const RejectiveChain& chain, std::size_t label,
                            const Caps& caps = {});

struct ProjectiveCover {
  std::vector<std::size_t> labels;  ///< one per indecomposable summand of the cover
  GammaModule projective;
  Matrix map;  ///< M.dim x projective.dim
  Subspace kernel;
};
/// Minimal projective cover. Generators are chosen greedily from the echelon
/// bases of e_Y M, label by label.
ProjectiveCover projective_cover(const GammaAlgebra& gamma, const GammaModule& m);
/// Length of a minimal projective resolution, or nullopt past the cap.
std::optional<std::size_t> proj_dimension(const GammaAlgebra& gamma, const GammaModule& m, std::size_t cap);

struct LabelCertificate {
  std::string id;
  std::size_t level = 0;
  std::size_t multiplicity = 0;
  std::size_t u_dim = 0;
  std::vector<std::string> u_decomposition;
  std::size_t standard_dim = 0;
  std::optional<std::size_t> pd_standard;
  std::optional<std::size_t> pd_simple;
  bool trace_agrees = false;
  bool check_a = false;
  bool check_b = false;
  bool strong = false;
  bool pd_bound = false;
};

struct QHCertificate {
  std::size_t ell = 0;
  std::size_t gamma_dim = 0;
  bool basic = true;
  bool dualized = false;  ///< certified on the dual chain over the opposite algebra
  std::vector<LabelCertificate> labels;
  std::optional<std::size_t> gldim;
  bool gldim_bound = false;
  bool passed = false;
  std::vector<std::string> witnesses;
};

/// Runs every check on the chain. Iyama chains are certified through their dual.
QHCertificate certify(const RejectiveChain& chain, const Caps& caps = {}, bool basic = true);
QHCertificate certify(const Representation& x, const LengthFunction& lambda, const Caps& caps = {});

}  // namespace grmlab
