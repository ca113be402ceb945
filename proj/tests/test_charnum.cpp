#include <gtest/gtest.h>

#include "flopcalc/bordism.hpp"
#include "flopcalc/charnum.hpp"
#include "oracles.hpp"

using namespace flopcalc;

TEST(SwNumber, Examples) {
  EXPECT_TRUE(sw_number(rp_product({4}), Partition({4})));
  EXPECT_FALSE(sw_number(parse_space("rp:2,2"), Partition({2, 1, 1})));
  EXPECT_FALSE(sw_number(rp_product({3}), Partition({2, 1})));
  EXPECT_TRUE(sw_number(rp_product({2}), Partition({1, 1})));
  EXPECT_TRUE(sw_number(point_space(), Partition()));
}

TEST(SwNumber, WeightMismatchThrows) {
  EXPECT_THROW(sw_number(rp_product({4}), Partition({3})), std::invalid_argument);
  EXPECT_THROW(s_number(rp_product({4}), Partition({2, 1})), std::invalid_argument);
}

TEST(SwNumber, RealProjectiveSpacesMatchBinomialProducts) {
  // w_I[RP^n] is the product of C(n+1, i_t) mod 2.
  const auto rows = oracle::pascal_mod2(16);
  for (int n = 1; n <= 12; ++n) {
    const Space s = rp_product({n});
    const NumberVector v = number_vector(s);
    for (const auto& I : partitions(n)) {
      bool want = true;
      for (int part : I.parts()) want = want && rows[static_cast<std::size_t>(n + 1)][static_cast<std::size_t>(part)];
      ASSERT_EQ(v.at(I), want) << n << " " << I.to_string();
      ASSERT_EQ(sw_number(s, I), want);
    }
  }
}

TEST(NumberVector, AgreesWithSingleNumbers) {
  for (const std::string spec : {"hyp:2,4", "bundle:base=rp:2,1;A=g1,g2;B=0,0", "rp:2,1*rp:3", "hyp:3,4"}) {
    const Space s = parse_space(spec);
    const NumberVector v = number_vector(s);
    ASSERT_EQ(v.bits().size(), partitions(s.dim()).size());
    for (const auto& I : partitions(s.dim())) ASSERT_EQ(v.at(I), sw_number(s, I)) << spec << " " << I.to_string();
  }
}

TEST(NumberVector, Basics) {
  const NumberVector a = number_vector(rp_product({2}));
  EXPECT_EQ(a.to_bitstring(), "11");
  EXPECT_TRUE((a + a).is_zero());
  EXPECT_THROW(a.at(Partition({3})), std::invalid_argument);
  EXPECT_THROW(NumberVector(2, {true}), std::invalid_argument);
  NumberVector b = number_vector(rp_product({3}));
  EXPECT_TRUE(b.is_zero());
  EXPECT_THROW(b += a, std::invalid_argument);
}

TEST(ProductNumbers, MatchesRingOfTheProduct) {
  const std::vector<std::string> specs = {"rp:2", "rp:4", "rp:5", "hyp:2,4", "bundle:base=rp:1;V=g,0,0", "rp:2,2", "pt"};
  for (const auto& a : specs) {
    for (const auto& b : specs) {
      const Space x = parse_space(a), y = parse_space(b);
      if (x.dim() + y.dim() > 11) continue;
      ASSERT_EQ(product_numbers(number_vector(x), number_vector(y)), number_vector(product(x, y))) << a << " * " << b;
    }
  }
}

TEST(PowerSum, RealProjectiveSpaces) {
  for (int n = 1; n <= 14; ++n) {
    EXPECT_EQ(s_number(rp_product({n}), Partition({n})), (n + 1) % 2 == 1) << n;
    for (int k = 1; k <= n; ++k) {
      const F2Poly p = power_sum_class(rp_product({n}), k);
      EXPECT_EQ(p.is_zero(), (n + 1) % 2 == 0);
    }
  }
}

TEST(PowerSum, HypersurfacesMatchBinomial) {
  // s_n[H(a,b)] = C(a+b, a) mod 2 with n = a + b - 1, for a >= 2. H(1,b) fibres
  // over the circle and has vanishing s_b.
  for (int b = 1; b <= 12; ++b) EXPECT_FALSE(s_number(hypersurface11(1, b), Partition({b}))) << b;
  for (int a = 2; a <= 7; ++a) {
    for (int b = a; a + b - 1 <= 13; ++b) {
      EXPECT_EQ(s_number(hypersurface11(a, b), Partition({a + b - 1})), binom_mod2(a + b, a)) << a << "," << b;
    }
  }
}

TEST(PowerSum, DecomposablesHaveZeroSn) {
  EXPECT_FALSE(s_number(parse_space("rp:2,2"), Partition({4})));
  EXPECT_FALSE(s_number(parse_space("rp:2*hyp:2,4"), Partition({7})));
  EXPECT_FALSE(s_number(parse_space("rp:4,2"), Partition({6})));
}

TEST(PowerSum, TwoPartNumbersOfProducts) {
  // s_{(a,b)}[X x Y] = s_a[X] s_b[Y] for dim X = a, dim Y = b.
  const std::vector<std::string> specs = {"rp:2", "rp:4", "rp:6", "rp:3", "rp:5", "bundle:base=rp:2;A=g1,0;B=0,0"};
  for (const auto& a : specs) {
    for (const auto& b : specs) {
      const Space x = parse_space(a), y = parse_space(b);
      const Space p = product(x, y);
      const bool want = s_number(x, Partition({x.dim()})) && s_number(y, Partition({y.dim()}));
      EXPECT_EQ(s_number(p, Partition({x.dim(), y.dim()})), want) << a << " * " << b;
    }
  }
}

TEST(PowerSum, MultiPartNeedsRoots) {
  EXPECT_THROW(s_number(hypersurface11(2, 4), Partition({3, 2})), std::invalid_argument);
  EXPECT_NO_THROW(s_number(hypersurface11(2, 4), Partition({5})));
  EXPECT_TRUE(s_number(point_space(), Partition()));
}

TEST(LemmaCount, Validation) {
  const std::vector<int> odd = {3};
  EXPECT_THROW(lemma_count_number(odd, 0), std::invalid_argument);
  const std::vector<int> b = {4, 2};
  EXPECT_THROW(lemma_count_number(b, 3), std::invalid_argument);
  EXPECT_THROW(lemma_count_number(b, 8), std::invalid_argument);
  EXPECT_TRUE(lemma_count_number(b, 0));
}

TEST(LemmaCount, AgreesWithRingUpToDimension10) {
  for (int two_n = 2; two_n <= 10; two_n += 2) {
    for (const auto& half : partitions(two_n / 2)) {
      std::vector<int> b;
      for (int p : half.parts()) b.push_back(2 * p);
      const Space rp = rp_product(b);
      for (int two_i = 0; two_i <= two_n; two_i += 2) {
        const Partition I = Partition::w1_power(two_n, std::min(two_i, two_n - 1));
        ASSERT_EQ(lemma_count_number(b, two_i), sw_number(rp, I)) << rp.spec() << " " << two_i;
      }
    }
  }
}

TEST(TotaroFormula, AgreesWithRingOnTheFamily) {
  FlopCatalog catalog(FamilyConfig{}, 1);
  std::size_t checked = 0;
  for (int d = 3; d <= 9; ++d) {
    for (const auto& datum : catalog.data(d)) {
      const Space z = rp_product(datum.base);
      const std::vector<std::uint32_t> a = {datum.chars[0], datum.chars[1]}, b = {datum.chars[2], datum.chars[3]};
      const bool closed = totaro_flop_s_number(z, BundleChars::from_masks(z.ring(), a), BundleChars::from_masks(z.ring(), b));
      const Space x = datum.to_space();
      ASSERT_EQ(closed, s_number(x, Partition({d}))) << x.spec();
      ++checked;
    }
  }
  EXPECT_GT(checked, 1000u);
}

TEST(TotaroFormula, Validation) {
  const Space z = rp_product({2});
  const std::vector<std::uint32_t> three = {1u, 0u, 0u}, two = {1u, 0u};
  EXPECT_THROW(totaro_flop_s_number(z, BundleChars::from_masks(z.ring(), three), BundleChars::from_masks(z.ring(), two)),
               std::invalid_argument);
  const Space y = hypersurface11(1, 2);
  EXPECT_THROW(totaro_flop_s_number(y, BundleChars{}, BundleChars{}), std::invalid_argument);
}
