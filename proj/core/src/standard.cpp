#include "grmlab/standard.hpp"

#include <vector>

#include "grmlab/errors.hpp"

namespace grmlab {

namespace {

void check_vertex(const BoundQuiverAlgebra& alg, std::size_t v) {
  if (v >= alg.num_vertices()) throw UnknownVertex("vertex index " + std::to_string(v) + " out of range");
}

}  // namespace

Representation projective(const AlgebraPtr& alg, std::size_t v) {
  check_vertex(*alg, v);
  const std::size_t nv = alg->num_vertices();
  std::vector<std::size_t> dims(nv);
  for (std::size_t w = 0; w < nv; ++w) dims[w] = alg->basis_between(v, w).size();
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < alg->num_arrows(); ++a) {
    const auto s = alg->arrow(a).source;
    const auto t = alg->arrow(a).target;
    Matrix m(alg->field(), dims[t], dims[s]);
    const auto& cols = alg->basis_between(v, s);
    const auto& rows = alg->basis_between(v, t);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      auto arrows_of = alg->basis()[cols[j]].arrows;
      arrows_of.push_back(a);
      auto r = alg->reduce_arrows(v, arrows_of);
      for (std::size_t i = 0; i < rows.size(); ++i) m(i, j) = r[rows[i]];
    }
    arrows.push_back(std::move(m));
  }
  return Representation(alg, std::move(dims), std::move(arrows));
}

Representation injective(const AlgebraPtr& alg, std::size_t v) {
  check_vertex(*alg, v);
  return dual(projective(opposite(*alg), v), alg);
}

Representation simple(const AlgebraPtr& alg, std::size_t v) {
  check_vertex(*alg, v);
  std::vector<std::size_t> dims(alg->num_vertices(), 0);
  dims[v] = 1;
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < alg->num_arrows(); ++a)
    arrows.emplace_back(alg->field(), dims[alg->arrow(a).target], dims[alg->arrow(a).source]);
  return Representation(alg, std::move(dims), std::move(arrows));
}

Representation regular(const AlgebraPtr& alg) {
  std::vector<Representation> parts;
  for (std::size_t v = 0; v < alg->num_vertices(); ++v) parts.push_back(projective(alg, v));
  return direct_sum(parts).module;
}

Representation coregular(const AlgebraPtr& alg) {
  auto op = opposite(*alg);
  std::vector<Representation> parts;
  for (std::size_t v = 0; v < alg->num_vertices(); ++v) parts.push_back(dual(projective(op, v), alg));
  return direct_sum(parts).module;
}

}  // namespace grmlab
