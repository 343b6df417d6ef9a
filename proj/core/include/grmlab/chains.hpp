#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "grmlab/config.hpp"
#include "grmlab/decomp.hpp"
#include "grmlab/grmeasure.hpp"
#include "grmlab/module.hpp"

namespace grmlab {

enum class ChainKind { GR, Iyama, ADR, Custom };
std::string to_string(ChainKind k);
ChainKind parse_chain_kind(const std::string& s);

struct PhiEntry {
  std::string id;
  Representation module;
  std::size_t level = 0;         ///< largest i with the module a summand of X_i
  std::size_t multiplicity = 0;  ///< total multiplicity in the sum of all X_i
  std::optional<MeasureValue> measure;
};

/// X_1, ..., X_ell with C_i = Add(X_i + X_{i+1} + ... + X_ell).
struct RejectiveChain {
  AlgebraPtr algebra;
  ChainKind kind = ChainKind::Custom;
  std::vector<Representation> steps;
  std::optional<LengthFunction> lambda;
  std::vector<MeasureValue> measures;  ///< GR chains only
  std::vector<PhiEntry> phi;

  std::size_t ell() const { return steps.size(); }
  /// Indices into phi of the members lying in C_i.
  std::vector<std::size_t> members_of(std::size_t i) const;
};

/// Computes phi (classes, levels, multiplicities) from the steps.
void compute_phi(RejectiveChain& chain, const Caps& caps = {});
/// A chain from explicit steps; phi is computed, measures are not.
RejectiveChain chain_from_steps(AlgebraPtr algebra, std::vector<Representation> steps, ChainKind kind,
                                const Caps& caps = {});

/// Sum of the images of all maps from the generators into m.
Submodule trace(const std::vector<Representation>& generators, const Representation& m);
/// Intersection of the kernels of all maps from m into the cogenerators.
Submodule reject(const Representation& m, const std::vector<Representation>& cogenerators);

struct RejectResult {
  Submodule submodule;  ///< the smallest V with mu(M/V) < bound
  QuotientModule quotient;
};
/// Scans the lattice of m for the family {V : mu(M/V) < bound} and returns its
/// minimum, verified to lie in the family.
RejectResult reject_below(const Representation& m, const MeasureValue& bound, const LengthFunction& lambda,
                          const Caps& caps = {});

/// X_{i+1} = X_i / (reject below mu(X_i)). When summand_wise is set, rejects
/// are computed on the indecomposable summands of X_i and summed.
RejectiveChain gr_chain(const Representation& x, const LengthFunction& lambda, const Caps& caps = {},
                        bool summand_wise = true);
/// X_{i+1} = sum of the images of the radical endomorphisms of X_i.
RejectiveChain iyama_chain(const Representation& x, const Caps& caps = {});
/// X_i = sum over j = 1 .. LL - i + 1 of Lambda / rad^j Lambda.
RejectiveChain adr_chain(const AlgebraPtr& algebra, const Caps& caps = {});

/// The chain D(X_1), ..., D(X_ell) over the opposite algebra.
RejectiveChain dual_chain(const RejectiveChain& chain, const Caps& caps = {});

/// Sum of the images of the radical endomorphisms, as a submodule of m.
Submodule radical_endomorphism_image(const Representation& m, const Caps& caps = {});

struct ApproximationCheck {
  std::size_t phi_index = 0;
  std::size_t level = 0;  ///< approximation into C_level
  std::vector<std::size_t> target_dims;
  bool in_category = false;
  bool epic = false;
  bool universal = false;
};

struct LevelVerdict {
  std::size_t level = 0;
  bool left_rejective = true;  ///< C_level is left rejective in C_1 (for level >= 2)
  bool prerejective = true;
  bool rejective = true;
  std::vector<std::string> witnesses;
};

struct ChainVerdict {
  std::vector<LevelVerdict> levels;
  std::vector<ApproximationCheck> approximations;
  bool left_rejective = true;
  bool prerejective = true;
  bool rejective = true;
};

/// The candidate left C_level-approximation of Y. For GR chains this is the
/// quotient by reject_below with bound mu(X_{level-1}); otherwise the quotient
/// of Y by its reject in the members of C_level. Level 1 gives the identity and
/// level ell + 1 the zero map.
QuotientModule approximation(const RejectiveChain& chain, const Representation& y, std::size_t level,
                             const Caps& caps = {});

/// Checks the left-handed chain conditions at every level.
ChainVerdict verify_chain(const RejectiveChain& chain, const Caps& caps = {});

}  // namespace grmlab
