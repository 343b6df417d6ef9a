#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "grmlab/config.hpp"
#include "grmlab/module.hpp"
#include "grmlab/sublattice.hpp"

namespace grmlab {

/// A finite strictly increasing sequence of positive rationals.
struct MeasureValue {
  std::vector<Rational> values;

  bool empty() const { return values.empty(); }
  bool is_valid() const;
  /// The sequence with t appended; t must exceed every entry.
  MeasureValue appended(const Rational& t) const;
  std::string to_string() const;
};

/// Equal iff identical; otherwise I < J iff the minimum of the symmetric
/// difference lies in J.
std::strong_ordering measure_order(const MeasureValue& i, const MeasureValue& j);
inline std::strong_ordering operator<=>(const MeasureValue& i, const MeasureValue& j) { return measure_order(i, j); }
inline bool operator==(const MeasureValue& i, const MeasureValue& j) { return i.values == j.values; }

struct GRMeasure {
  MeasureValue value;
  /// Y_1 < ... < Y_t of indecomposable submodules, in the measured module.
  std::vector<Submodule> witness;
};

/// Per-node measures over a lattice: end[i] for indecomposable nodes (best chain
/// ending at i) and down[i] = max of end over indecomposable nodes inside i.
struct LatticeMeasures {
  std::vector<MeasureValue> end;
  std::vector<MeasureValue> down;
  std::vector<std::ptrdiff_t> down_arg;  ///< node realizing down[i], or -1
  std::vector<std::ptrdiff_t> end_prev;  ///< predecessor in the chain realizing end[i], or -1
};
LatticeMeasures lattice_measures(const SubmoduleLattice& lattice, const LengthFunction& lambda, const Caps& caps = {});
/// Measure of the lattice's top node, with witness.
GRMeasure gr_measure(const SubmoduleLattice& lattice, const LengthFunction& lambda, const Caps& caps = {});
/// Summand-wise: mu(M) is the maximum of mu over the indecomposable summands.
GRMeasure gr_measure(const Representation& m, const LengthFunction& lambda, const Caps& caps = {});
/// The whole-lattice computation on M itself, without decomposing first.
GRMeasure gr_measure_full_lattice(const Representation& m, const LengthFunction& lambda, const Caps& caps = {});

}  // namespace grmlab
