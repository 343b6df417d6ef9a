#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "grmlab/config.hpp"
#include "grmlab/module.hpp"

namespace grmlab {

/// All submodules of a module, listed in order of nondecreasing total
/// dimension, together with the covering relation.
class SubmoduleLattice {
 public:
  const Representation& parent() const { return parent_; }
  std::size_t size() const { return nodes_.size(); }
  const Submodule& node(std::size_t i) const { return nodes_[i]; }
  const std::vector<Submodule>& nodes() const { return nodes_; }
  /// Pairs (lower, upper), upper covering lower.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }
  /// Indices of the nodes covered by i.
  const std::vector<std::size_t>& lower_covers(std::size_t i) const { return lower_[i]; }
  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return upper_[i]; }
  std::optional<std::size_t> index_of(const Submodule& u) const;
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return nodes_.size() - 1; }

  /// Whether node i is indecomposable, computed on first use and cached.
  bool is_indecomposable(std::size_t i, const Caps& caps = {}) const;

 private:
  friend SubmoduleLattice all_submodules(const Representation& m, const Caps& caps);
  explicit SubmoduleLattice(Representation parent) : parent_(std::move(parent)) {}

  Representation parent_;
  std::vector<Submodule> nodes_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::vector<std::size_t>> lower_;
  std::vector<std::vector<std::size_t>> upper_;
  std::map<std::vector<Scalar>, std::size_t> index_;
  mutable std::vector<std::int8_t> indecomposable_;
};

/// Canonical key of a submodule (per-vertex echelon data).
std::vector<Scalar> submodule_key(const Submodule& u);

/// Breadth-first closure from 0 by simple extensions U + k v, v lifting a
/// socle vector of M/U (taken up to scalar). Throws LatticeCapExceeded.
SubmoduleLattice all_submodules(const Representation& m, const Caps& caps = {});

/// Nonzero nodes flagged indecomposable, in lattice order.
std::vector<std::size_t> indecomposable_submodules(const SubmoduleLattice& lattice, const Caps& caps = {});

}  // namespace grmlab
