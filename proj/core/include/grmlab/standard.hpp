#pragma once

#include <cstddef>

#include "grmlab/module.hpp"

namespace grmlab {

/// Lambda e_v: basis the residue paths starting at v; arrows act by appending.
Representation projective(const AlgebraPtr& alg, std::size_t v);
/// D(e_v Lambda), built as the dual of the projective at v over the opposite algebra.
Representation injective(const AlgebraPtr& alg, std::size_t v);
Representation simple(const AlgebraPtr& alg, std::size_t v);
/// Lambda as a left module, the sum of all projectives.
Representation regular(const AlgebraPtr& alg);
/// D(Lambda), the sum of all injectives.
Representation coregular(const AlgebraPtr& alg);

}  // namespace grmlab
