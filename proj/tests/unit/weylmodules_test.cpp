#include "typea/weylmodules.hpp"

#include <gtest/gtest.h>

#include <random>

#include "typea/error.hpp"
#include "typea/oracle.hpp"

namespace typea {
namespace {

const Diagram kEmpty;

ModuleDecomp module_of(ProductShape shape, std::vector<std::pair<ModuleKey, std::int64_t>> entries) {
  ModuleDecomp m(std::move(shape));
  for (const auto& [k, c] : entries) m.add(k, c);
  return m;
}

ModuleDecomp random_module(std::mt19937& rng, const ProductShape& shape) {
  ModuleDecomp m(shape);
  std::uniform_int_distribution<int> count(0, 4), mult(1, 3);
  for (int i = count(rng); i > 0; --i) {
    ModuleKey key;
    for (int d : shape.degrees) {
      const auto ps = partitions_of(d);
      key.push_back(ps[std::uniform_int_distribution<std::size_t>(0, ps.size() - 1)(rng)]);
    }
    m.add(key, mult(rng));
  }
  return m;
}

ProductShape random_shape(std::mt19937& rng) {
  ProductShape s;
  for (int i = std::uniform_int_distribution<int>(0, 3)(rng); i > 0; --i) {
    s.degrees.push_back(std::uniform_int_distribution<int>(0, 4)(rng));
  }
  return s;
}

TEST(ModuleDecomp, SumAndMultiplicity) {
  const ProductShape shape{{2}};
  const auto x = module_of(shape, {{{Diagram({2})}, 1}});
  const auto y = module_of(shape, {{{Diagram({2})}, 2}});
  EXPECT_EQ(md_sum(x, ModuleDecomp(shape)), x);
  EXPECT_EQ(md_multiplicity(md_sum(x, y), {Diagram({2})}), 3);
  EXPECT_EQ(md_multiplicity(ModuleDecomp(shape), {column(2)}), 0);
  EXPECT_THROW(md_sum(x, ModuleDecomp(ProductShape{{3}})), ShapeMismatch);
  EXPECT_THROW(md_multiplicity(x, {Diagram({3})}), ShapeMismatch);
  EXPECT_THROW(md_multiplicity(x, {Diagram({2}), kEmpty}), ShapeMismatch);
}

TEST(ModuleDecomp, ZeroMultiplicitiesAreNotStored) {
  ModuleDecomp m(ProductShape{{1}});
  m.add({Diagram({1})}, 0);
  EXPECT_TRUE(m.is_zero());
  EXPECT_THROW(m.add({Diagram({1})}, -1), Error);
}

TEST(ModuleDecomp, TensorExamples) {
  const auto a = module_of(ProductShape{{2}}, {{{Diagram({2})}, 1}});
  const auto b = module_of(ProductShape{{1}}, {{{Diagram({1})}, 1}});
  EXPECT_EQ(md_tensor(ModuleDecomp::unit(), a), a);
  EXPECT_EQ(md_tensor(a, ModuleDecomp::unit()), a);
  const auto ab = md_tensor(a, b);
  EXPECT_EQ(ab.shape(), (ProductShape{{2, 1}}));
  EXPECT_EQ(ab, module_of(ProductShape{{2, 1}}, {{{Diagram({2}), Diagram({1})}, 1}}));
}

TEST(ModuleDecomp, DimensionIsAdditiveAndMultiplicative) {
  std::mt19937 rng(20261015);
  for (int trial = 0; trial < 200; ++trial) {
    const ProductShape s = random_shape(rng), t = random_shape(rng);
    const auto a = random_module(rng, s), b = random_module(rng, s), c = random_module(rng, t);
    ASSERT_EQ(md_sum(a, b).dimension(), a.dimension() + b.dimension());
    ASSERT_EQ(md_tensor(a, c).dimension(), a.dimension() * c.dimension());
    ASSERT_EQ(md_sum(a, b), md_sum(b, a));
  }
}

TEST(Hyperoctahedral, Examples) {
  EXPECT_EQ(hyperoctahedral_module(0), module_of(ProductShape{{0}}, {{{kEmpty}, 1}}));
  EXPECT_EQ(hyperoctahedral_module(1), module_of(ProductShape{{2}}, {{{Diagram({2})}, 1}}));
  EXPECT_EQ(hyperoctahedral_module(2),
            module_of(ProductShape{{4}}, {{{Diagram({4})}, 1}, {{Diagram({2, 2})}, 1}}));
}

TEST(Hyperoctahedral, MatchesMatchingsOracle) {
  for (int r = 0; r <= 4; ++r) {
    const auto oracle_decomp = decompose(oracle::matchings_character(r));
    EXPECT_EQ(hyperoctahedral_module(r), single_factor(2 * r, oracle_decomp)) << "r=" << r;
  }
}

TEST(Hyperoctahedral, IndexOfHyperoctahedralSubgroup) {
  for (int r = 0; r <= 5; ++r) {
    EXPECT_EQ(hyperoctahedral_module(r).dimension(),
              factorial(2 * r) / ((std::uint64_t{1} << r) * factorial(r)));
  }
}

TEST(SignedHyperoctahedral, Examples) {
  EXPECT_EQ(signed_hyperoctahedral_module(0, 0), module_of(ProductShape{{0}}, {{{kEmpty}, 1}}));
  EXPECT_EQ(signed_hyperoctahedral_module(1, 0), module_of(ProductShape{{1}}, {{{Diagram({1})}, 1}}));
  EXPECT_EQ(signed_hyperoctahedral_module(1, 1),
            module_of(ProductShape{{2}}, {{{Diagram({2})}, 2}, {{column(2)}, 1}}));
  EXPECT_EQ(signed_hyperoctahedral_module(2, 0), module_of(ProductShape{{2}}, {{{column(2)}, 1}}));
}

TEST(SignedHyperoctahedral, MatchesInducedCharacters) {
  for (int p = 0; p <= 4; ++p) {
    for (int q = 0; p + q <= 8; ++q) {
      ClassFunction induced = ClassFunction::zero(p + q);
      for (int k = 0; k <= std::min(p, q); ++k) {
        const int degrees[] = {2 * k, p - k, q - k};
        const ClassFunction chars[] = {oracle::matchings_character(k), sign_character(p - k),
                                       sign_character(q - k)};
        induced += oracle::induced_character(degrees, chars);
      }
      ASSERT_EQ(signed_hyperoctahedral_module(p, q), single_factor(p + q, decompose(induced)))
          << "p=" << p << " q=" << q;
      ASSERT_EQ(signed_hyperoctahedral_module(p, q), signed_hyperoctahedral_module(q, p));
    }
  }
}

TEST(Diagonal, ExamplesAndDimension) {
  EXPECT_EQ(diagonal_module(0), module_of(ProductShape{{0, 0}}, {{{kEmpty, kEmpty}, 1}}));
  EXPECT_EQ(diagonal_module(1), module_of(ProductShape{{1, 1}}, {{{Diagram({1}), Diagram({1})}, 1}}));
  const auto d2 = diagonal_module(2);
  EXPECT_EQ(d2, module_of(ProductShape{{2, 2}},
                          {{{Diagram({2}), Diagram({2})}, 1}, {{column(2), column(2)}, 1}}));
  EXPECT_EQ(md_multiplicity(d2, {Diagram({2}), Diagram({2})}), 1);
  EXPECT_EQ(md_multiplicity(d2, {column(2), Diagram({2})}), 0);
  for (int r = 0; r <= 6; ++r) EXPECT_EQ(diagonal_module(r).dimension(), factorial(r));
}

TEST(MatchingSummands, Examples) {
  EXPECT_EQ(matching_first_module(1, 1, 1), ModuleDecomp(ProductShape{{1, 1}}));
  EXPECT_EQ(matching_first_module(2, 1, 2),
            module_of(ProductShape{{2, 1}}, {{{Diagram({2}), Diagram({1})}, 1}}));
  EXPECT_EQ(matching_last_module(1, 1, 2), module_of(ProductShape{{0, 2}}, {{{kEmpty, Diagram({2})}, 1}}));
  // min(p,q) < r/2
  EXPECT_EQ(matching_first_module(3, 0, 2), ModuleDecomp(ProductShape{{2, 1}}));
}

TEST(CoherentUTilde, Examples) {
  EXPECT_EQ(coherent_u_tilde(1, 1, {0, 2}).total,
            module_of(ProductShape{{0, 2}}, {{{kEmpty, Diagram({2})}, 3}, {{kEmpty, column(2)}, 1}}));
  EXPECT_EQ(coherent_u_tilde(2, 1, {2, 1}).total,
            module_of(ProductShape{{2, 1}}, {{{Diagram({2}), Diagram({1})}, 1}}));
  EXPECT_EQ(coherent_u_tilde(2, 2, {2, 2}).total,
            module_of(ProductShape{{2, 2}}, {{{Diagram({2}), Diagram({2})}, 4},
                                             {{Diagram({2}), column(2)}, 1},
                                             {{column(2), Diagram({2})}, 1}}));
  EXPECT_THROW(coherent_u_tilde(2, 2, {2, 1}), DegreeMismatch);
}

TEST(CoherentUTilde, ParitySplit) {
  // p+q odd: U(p,q) part is the matching-first summand at n_h.
  const auto odd = coherent_u_tilde(2, 1, {2, 1});
  EXPECT_EQ(odd.non_genuine, matching_first_module(2, 1, 2));
  EXPECT_EQ(odd.genuine, matching_last_module(2, 1, 1));
  // p+q even: roles swap.
  const auto even = coherent_u_tilde(2, 2, {2, 2});
  EXPECT_EQ(even.non_genuine, matching_last_module(2, 2, 2));
  EXPECT_EQ(even.genuine, matching_first_module(2, 2, 2));
  EXPECT_EQ(md_sum(even.non_genuine, even.genuine), even.total);
}

TEST(CoherentSu, Examples) {
  EXPECT_EQ(coherent_su(1, 1, {1, 1}),
            module_of(ProductShape{{1, 1}}, {{{Diagram({1}), Diagram({1})}, 2}}));
  EXPECT_EQ(coherent_su(1, 1, {0, 2}), coherent_u_tilde(1, 1, {0, 2}).total);
  EXPECT_EQ(coherent_su(2, 2, {2, 2}),
            md_sum(coherent_u_tilde(2, 2, {2, 2}).total, md_sum(diagonal_module(2), diagonal_module(2))));
  EXPECT_THROW(coherent_su(1, 1, {1, 2}), DegreeMismatch);
}

TEST(CoherentSu, ShapeAndBranch) {
  for (int n = 1; n <= 8; ++n) {
    for (int p = 0; p <= n; ++p) {
      for (int nh = 0; nh <= n; ++nh) {
        const CosetSignature sig{nh, n - nh};
        const auto su = coherent_su(p, n - p, sig);
        ASSERT_EQ(su.shape(), (ProductShape{{sig.n_h, sig.n_0}}));
        const auto ut = coherent_u_tilde(p, n - p, sig).total;
        if (p == n - p && sig.n_h == p && sig.n_0 == p) {
          ASSERT_EQ(su, md_sum(ut, md_sum(diagonal_module(p), diagonal_module(p))));
        } else {
          ASSERT_EQ(su, ut);
        }
      }
    }
  }
}

TEST(CoherentComplex, GlcExamples) {
  EXPECT_EQ(coherent_glc({1, 0}),
            module_of(ProductShape{{1, 0, 1, 0}}, {{{Diagram({1}), kEmpty, Diagram({1}), kEmpty}, 1}}));
  const ModuleKey ones{Diagram({1}), Diagram({1}), Diagram({1}), Diagram({1})};
  EXPECT_EQ(coherent_glc({1, 1}), module_of(ProductShape{{1, 1, 1, 1}}, {{ones, 1}}));
  EXPECT_EQ(coherent_glc({2, 1}).dimension(), 2u);
}

TEST(CoherentComplex, GlcIsRegularRepresentation) {
  for (int n = 0; n <= 8; ++n) {
    for (int nh = 0; nh <= n; ++nh) {
      EXPECT_EQ(coherent_glc({nh, n - nh}).dimension(), factorial(nh) * factorial(n - nh));
    }
  }
}

TEST(CoherentComplex, SlcExamples) {
  EXPECT_EQ(coherent_slc({2, 1}), coherent_glc({2, 1}));
  const ModuleKey ones{Diagram({1}), Diagram({1}), Diagram({1}), Diagram({1})};
  EXPECT_EQ(coherent_slc({1, 1}), module_of(ProductShape{{1, 1, 1, 1}}, {{ones, 2}}));
  const auto slc = coherent_slc({2, 2});
  EXPECT_EQ(slc.multiplicity({column(2), Diagram({2}), Diagram({2}), column(2)}), 1);
  EXPECT_EQ(slc.multiplicity({Diagram({2}), Diagram({2}), Diagram({2}), Diagram({2})}), 2);
}

TEST(CoherentComplex, MismatchedFactorsGiveZero) {
  const auto m = coherent_complex({2, 1}, {0, 3}, true);
  EXPECT_TRUE(m.is_zero());
  EXPECT_EQ(m.shape(), (ProductShape{{2, 1, 0, 3}}));
  EXPECT_EQ(coherent_complex({2, 1}, {2, 1}, false), coherent_glc({2, 1}));
  EXPECT_THROW(coherent_complex({2, 1}, {2, 2}, true), DegreeMismatch);
}

}  // namespace
}  // namespace typea
