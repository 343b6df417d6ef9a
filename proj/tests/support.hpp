#pragma once

#include <cstdint>

#include "grmlab/module.hpp"
#include "grmlab/quiver.hpp"
#include "grmlab/standard.hpp"

namespace grmlab::testing {

inline AlgebraPtr lambda1(std::uint32_t p = 2) {
  AlgebraSpec s;
  s.prime = p;
  s.quiver.vertices = {"1", "2"};
  s.quiver.arrows = {{"alpha", 0, 0}, {"beta", 0, 1}};
  s.relations = {{{1, {"alpha", "alpha", "alpha"}}}, {{1, {"alpha", "beta"}}}};
  s.nilpotency_bound = 4;
  return build_algebra(s);
}

inline AlgebraPtr lambda2(std::uint32_t p = 2) {
  AlgebraSpec s;
  s.prime = p;
  s.quiver.vertices = {"1", "2"};
  s.quiver.arrows = {{"alpha", 0, 0}, {"beta", 0, 1}, {"gamma", 0, 1}};
  s.relations = {{{1, {"alpha", "alpha", "alpha"}}}, {{1, {"alpha", "beta"}}}, {{1, {"alpha", "gamma"}}}};
  s.nilpotency_bound = 4;
  return build_algebra(s);
}

inline AlgebraPtr kronecker(std::uint32_t p = 2) {
  AlgebraSpec s;
  s.prime = p;
  s.quiver.vertices = {"1", "2"};
  s.quiver.arrows = {{"a", 0, 1}, {"b", 0, 1}};
  s.nilpotency_bound = 2;
  return build_algebra(s);
}

inline AlgebraPtr semisimple(std::uint32_t p = 2) {
  AlgebraSpec s;
  s.prime = p;
  s.quiver.vertices = {"1", "2"};
  s.nilpotency_bound = 1;
  return build_algebra(s);
}

/// A representation from integer matrices; arrows beyond the list act as zero.
inline Representation rep(const AlgebraPtr& a, std::vector<std::size_t> dims,
                          const std::vector<std::vector<std::vector<std::int64_t>>>& arrows) {
  std::vector<Matrix> ms;
  for (std::size_t k = 0; k < a->num_arrows(); ++k) {
    const auto& ar = a->arrow(k);
    if (k < arrows.size() && !arrows[k].empty()) {
      ms.push_back(Matrix::from_rows(a->field(), arrows[k], dims[ar.source]));
    } else {
      ms.emplace_back(a->field(), dims[ar.target], dims[ar.source]);
    }
  }
  return Representation(a, std::move(dims), std::move(ms));
}

/// Over Lambda_1 or Lambda_2: the (2,1) module with top L_1 and radical L_1 + L_2.
inline Representation x2(const AlgebraPtr& a) { return rep(a, {2, 1}, {{{0, 0}, {1, 0}}, {{1, 0}}}); }

/// Uniserial with dimension vector (n, 0), alpha a single Jordan block.
inline Representation uniserial_loop(const AlgebraPtr& a, std::size_t n) {
  std::vector<std::vector<std::int64_t>> j(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i + 1 < n; ++i) j[i + 1][i] = 1;
  return rep(a, {n, 0}, {j});
}

/// Uniserial 1 over 2: dimension vector (1,1), beta nonzero.
inline Representation uniserial_12(const AlgebraPtr& a) { return rep(a, {1, 1}, {{}, {{1}}}); }

/// Lambda + D(Lambda).
inline Representation generator_cogenerator(const AlgebraPtr& a) {
  return direct_sum(std::vector<Representation>{regular(a), coregular(a)}).module;
}

/// Kronecker module of dimension (2,2): a = identity, b = nilpotent Jordan block.
inline Representation kronecker_r(const AlgebraPtr& a) { return rep(a, {2, 2}, {{{1, 0}, {0, 1}}, {{0, 0}, {1, 0}}}); }

}  // namespace grmlab::testing
