#include <gtest/gtest.h>

#include <random>

#include "grmlab/decomp.hpp"
#include "grmlab/errors.hpp"
#include "grmlab/standard.hpp"
#include "support.hpp"

using namespace grmlab;
using namespace grmlab::testing;

namespace {

Representation sum_of(std::vector<Representation> parts) { return direct_sum(parts).module; }

void expect_reassembles(const Decomposition& d) {
  const auto& m = d.original;
  Morphism total = Morphism::zero(m, m);
  for (const auto& part : d.parts) {
    ASSERT_EQ(part.embeddings.size(), part.multiplicity);
    for (std::size_t k = 0; k < part.multiplicity; ++k) {
      EXPECT_TRUE(is_morphism(part.module, m, part.embeddings[k]));
      EXPECT_TRUE(is_morphism(m, part.module, part.projections[k]));
      EXPECT_EQ(compose(part.projections[k], part.embeddings[k]), Morphism::identity(part.module));
      total = total + compose(part.embeddings[k], part.projections[k]);
    }
  }
  EXPECT_EQ(total, Morphism::identity(m));
}

}  // namespace

TEST(FittingSplit, Examples) {
  auto a = lambda1();
  auto m = sum_of({simple(a, 0), simple(a, 1)});
  EXPECT_FALSE(fitting_split(m, Morphism::identity(m)));
  EXPECT_FALSE(fitting_split(m, Morphism::zero(m, m)));
  Morphism proj = Morphism::identity(m);
  proj.blocks[1] = Matrix(a->field(), 1, 1);
  auto s = fitting_split(m, proj);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->kernel_part.dims(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(s->image_part.dims(), (std::vector<std::size_t>{1, 0}));
}

TEST(Decompose, Examples) {
  auto a1 = lambda1();
  auto d = decompose(regular(a1));
  ASSERT_EQ(d.parts.size(), 2u);
  for (const auto& p : d.parts) EXPECT_EQ(p.multiplicity, 1u);
  expect_reassembles(d);

  auto p1 = projective(a1, 0);
  auto dd = decompose(sum_of({p1, p1}));
  ASSERT_EQ(dd.parts.size(), 1u);
  EXPECT_EQ(dd.parts[0].multiplicity, 2u);
  expect_reassembles(dd);

  auto a2 = lambda2();
  auto q2 = injective(a2, 1);
  EXPECT_EQ(q2.dims(), (std::vector<std::size_t>{2, 1}));
  EXPECT_TRUE(is_indecomposable(q2));
  EXPECT_EQ(decompose(q2).parts.size(), 1u);
}

TEST(Decompose, KrullSchmidtAtDeskScale) {
  for (std::uint32_t p : {2u, 3u}) {
    auto a = lambda2(p);
    std::vector<Representation> pool{projective(a, 0), projective(a, 1), injective(a, 0), injective(a, 1),
                                     simple(a, 0), x2(lambda2(p)), simple(a, 1)};
    auto m = sum_of(pool);
    auto dm = decompose(m);
    expect_reassembles(dm);
    EXPECT_EQ(dm.summand_count(), pool.size());
    // Multiset of classes matches the pieces.
    IsoRegistry reg;
    for (const auto& part : dm.parts) reg.find_or_insert(part.module);
    for (const auto& x : pool) EXPECT_TRUE(reg.find(x).has_value());
  }
}

TEST(Isomorphism, Examples) {
  auto a = lambda1();
  auto p1 = projective(a, 0);
  auto iso = is_isomorphic(p1, p1);
  ASSERT_TRUE(iso);
  EXPECT_TRUE(is_isomorphism(*iso));
  EXPECT_FALSE(is_isomorphic(simple(a, 0), simple(a, 1)));

  Submodule u = Submodule::zero(p1);
  u.parts[0] = Subspace::span(a->field(), 3, std::vector<Vector>{{0, 0, 1}});
  auto q = quotient(p1, u).module;
  auto w = is_isomorphic(q, x2(a));
  ASSERT_TRUE(w);
  EXPECT_TRUE(is_morphism(q, x2(a), *w));
  EXPECT_TRUE(is_isomorphism(*w));
}

TEST(Isomorphism, EquivalenceOnPool) {
  auto a = lambda2(3);
  std::vector<Representation> pool{projective(a, 0), injective(a, 0), injective(a, 1),
                                   sum_of({simple(a, 0), simple(a, 1)}), x2(a)};
  // Add re-based copies of some pool members.
  std::mt19937_64 rng(5);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& m = pool[i];
    Morphism g;
    for (std::size_t v = 0; v < m.num_vertices(); ++v) {
      while (true) {
        Matrix b(a->field(), m.dim(v), m.dim(v));
        for (std::size_t r = 0; r < m.dim(v); ++r)
          for (std::size_t c = 0; c < m.dim(v); ++c) b(r, c) = rng() % 3;
        if (rank(b) == m.dim(v)) {
          g.blocks.push_back(b);
          break;
        }
      }
    }
    std::vector<Matrix> arrows;
    for (std::size_t k = 0; k < a->num_arrows(); ++k) {
      const auto& ar = a->arrow(k);
      arrows.push_back(g.blocks[ar.target] * m.arrow(k) * *inverse(g.blocks[ar.source]));
    }
    pool.emplace_back(a, m.dims(), arrows);
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = 0; j < pool.size(); ++j) {
      auto ij = is_isomorphic(pool[i], pool[j]);
      auto ji = is_isomorphic(pool[j], pool[i]);
      EXPECT_EQ(ij.has_value(), ji.has_value());
      if (ij) {
        EXPECT_TRUE(is_morphism(pool[i], pool[j], *ij));
        EXPECT_TRUE(is_isomorphism(*ij));
        auto inv = inverse_morphism(*ij);
        EXPECT_TRUE(is_morphism(pool[j], pool[i], inv));
        for (std::size_t k = 0; k < pool.size(); ++k) {
          auto jk = is_isomorphic(pool[j], pool[k]);
          if (jk) EXPECT_TRUE(is_isomorphism(compose(*jk, *ij)));
        }
      }
    }
    EXPECT_TRUE(is_isomorphic(pool[i], pool[i]));
  }
  EXPECT_TRUE(is_isomorphic(pool[0], pool[5]));
  EXPECT_TRUE(is_isomorphic(pool[2], pool[7]));
}

TEST(LocalRadical, Examples) {
  auto a = lambda1();
  auto l1 = local_radical(simple(a, 0));
  EXPECT_EQ(l1.radical.dim(), 0u);
  EXPECT_EQ(l1.residue_dim, 1u);
  auto p1 = local_radical(projective(a, 0));
  EXPECT_EQ(p1.radical.dim(), 2u);
  EXPECT_EQ(p1.residue_dim, 1u);
  auto m = x2(a);
  auto rx = local_radical(m);
  EXPECT_EQ(rx.radical.dim(), hom_space(m, m).dim() - 1);
  EXPECT_THROW(local_radical(sum_of({simple(a, 0), simple(a, 0)})), NotLocal);
}

TEST(LocalRadical, EnumerationOracle) {
  // Over F_2 the radical of a local End is exactly its set of non-invertible elements.
  auto a = lambda2();
  for (const auto& m : {projective(a, 0), injective(a, 0), injective(a, 1), x2(a)}) {
    auto end = endomorphism_algebra(m);
    auto rad = local_radical(end);
    VectorEnumerator en(a->field(), end.algebra.dim(), 1u << 16);
    do {
      const auto& x = en.current();
      EXPECT_EQ(rad.radical.contains(x), !is_isomorphism(end.hom.combine(x)));
    } while (en.next());
  }
}

TEST(AlgebraRadical, Examples) {
  auto a = lambda1();
  auto f1 = block_algebra({simple(a, 0)});
  EXPECT_EQ(f1.algebra.dim(), 1u);
  EXPECT_EQ(f1.radical.dim(), 0u);
  auto f2 = block_algebra({simple(a, 0), simple(a, 1)});
  EXPECT_EQ(f2.radical.dim(), 0u);
  auto f3 = block_algebra({projective(a, 0), simple(a, 0)});
  EXPECT_EQ(f3.radical.dim(), 4u);
  EXPECT_TRUE(f3.algebra.is_associative());
  EXPECT_TRUE(f3.algebra.has_identity());
  EXPECT_TRUE(nilpotency_index(f3.algebra, f3.radical).has_value());
}

TEST(AlgebraRadical, NonBasicTransport) {
  auto a = lambda1(3);
  auto p1 = projective(a, 0);
  auto b = block_algebra({p1, p1, simple(a, 1)});
  // A/rad = M_2(F_3) x F_3.
  EXPECT_EQ(b.algebra.dim() - b.radical.dim(), 5u);
  auto basic = block_algebra({p1, simple(a, 1)});
  EXPECT_EQ(basic.algebra.dim() - basic.radical.dim(), 2u);
}
