#include <gtest/gtest.h>

#include "flopcalc/charnum.hpp"
#include "flopcalc/spaces.hpp"
#include "oracles.hpp"

using namespace flopcalc;

namespace {

F2Poly prod_roots(const Space& s) {
  F2Poly t = F2Poly::one(s.ring());
  for (const auto& r : s.ambient_roots()) t *= F2Poly::one(s.ring()) + r;
  return t;
}

// Complete homogeneous symmetric function h_j of the characters.
F2Poly complete_homogeneous(const std::vector<F2Poly>& x, int j, const RingPtr& R) {
  if (j == 0) return F2Poly::one(R);
  F2Poly sum(R);
  std::vector<int> e(x.size(), 0);
  // Weak compositions of j into x.size() parts.
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == x.size()) {
      e[i] = left;
      F2Poly m = F2Poly::one(R);
      for (std::size_t k = 0; k < x.size(); ++k) m *= pow(x[k], static_cast<std::uint64_t>(e[k]));
      sum += m;
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, j);
  return sum;
}

}  // namespace

TEST(RpProduct, TotalClassIsBinomial) {
  const auto rows = oracle::pascal_mod2(20);
  for (int n = 1; n <= 16; ++n) {
    const Space s = rp_product({n});
    EXPECT_EQ(s.dim(), n);
    ASSERT_TRUE(s.root_representable());
    for (int j = 0; j <= n; ++j) {
      const F2Poly w = s.w(j);
      const bool want = rows[static_cast<std::size_t>(n + 1)][static_cast<std::size_t>(j)];
      ASSERT_EQ(!w.is_zero(), want) << n << " " << j;
    }
  }
}

TEST(RpProduct, RootsGiveTotalClass) {
  for (const auto& exps : std::vector<std::vector<int>>{{3}, {2, 2}, {4, 1, 2}}) {
    const Space s = rp_product(exps);
    EXPECT_EQ(prod_roots(s), s.tangent_total());
    EXPECT_TRUE(s.tangent_roots().has_value());
  }
}

TEST(RpProduct, PointAndErrors) {
  const Space pt = point_space();
  EXPECT_EQ(pt.dim(), 0);
  EXPECT_EQ(pt.spec(), "pt");
  EXPECT_TRUE(integrate(pt, F2Poly::one(pt.ring())));
  EXPECT_THROW(rp_product({2, 0}), std::invalid_argument);
}

TEST(Hypersurface, DimensionAndExcessRoot) {
  const Space y = hypersurface11(2, 4);
  EXPECT_EQ(y.dim(), 5);
  EXPECT_FALSE(y.root_representable());
  EXPECT_FALSE(y.tangent_roots().has_value());
  ASSERT_EQ(y.excess_roots().size(), 1u);
  EXPECT_EQ(y.spec(), "hyp:2,4");
  // w(Y) (1 + g1 + g2) = w(RP^2 x RP^4) restricted.
  const F2Poly h = y.excess_roots()[0];
  EXPECT_EQ(y.tangent_total() * (F2Poly::one(y.ring()) + h), prod_roots(y));
  EXPECT_EQ(y.mu(), h);
}

TEST(Hypersurface, MatchesSphereBundleModel) {
  // The (1,1) hypersurface in RP^a x RP^b fibres over RP^a as RP(L^perp),
  // and w(L^perp) = (1+g)^{-1} = (1+g)^{2^m-1} once 2^m > a. So its numbers
  // are those of RP((2^m-1)L + trivial) over RP^a.
  for (int a = 1; a <= 4; ++a) {
    int lines = 1;
    while (lines + 1 <= a) lines = 2 * lines + 1;
    for (int b = std::max({a, lines, 2}); a + b - 1 <= 10; ++b) {
      std::vector<std::uint32_t> masks(static_cast<std::size_t>(b), 0u);
      for (int i = 0; i < lines; ++i) masks[static_cast<std::size_t>(i)] = 1u;
      const Space base = rp_product({a});
      const Space model = projective_bundle(base, BundleChars::from_masks(base.ring(), masks));
      const Space y = hypersurface11(a, b);
      ASSERT_EQ(model.dim(), y.dim());
      EXPECT_EQ(number_vector(y), number_vector(model)) << "a=" << a << " b=" << b;
    }
  }
}

TEST(ProjectiveBundle, DimensionRootsAndIntegration) {
  const Space z = rp_product({2, 1});
  const std::vector<std::uint32_t> masks = {1u, 2u, 0u, 0u};
  const Space e = projective_bundle(z, BundleChars::from_masks(z.ring(), masks), 2);
  EXPECT_EQ(e.dim(), 6);
  EXPECT_EQ(e.ambient_roots().size(), 9u);
  EXPECT_EQ(prod_roots(e), e.tangent_total());
  EXPECT_EQ(e.spec(), "bundle:base=rp:2,1;A=g1,g2;B=0,0");
  ASSERT_EQ(e.bundle_layers().size(), 1u);
  // The fundamental class pairs with g1^2 g2 u^3.
  EXPECT_TRUE(integrate(e, F2Poly(e.ring(), {e.ring()->top_monomial()})));
}

TEST(ProjectiveBundle, Errors) {
  const Space z = rp_product({2});
  const std::vector<std::uint32_t> one_mask = {1u};
  EXPECT_THROW(projective_bundle(z, BundleChars::from_masks(z.ring(), one_mask)), std::invalid_argument);
  const std::vector<std::uint32_t> bad = {2u, 0u};
  EXPECT_THROW(BundleChars::from_masks(z.ring(), bad), std::invalid_argument);
  const Space y = hypersurface11(1, 2);
  const std::vector<std::uint32_t> m2 = {0u, 0u};
  EXPECT_THROW(projective_bundle(y, BundleChars::from_masks(y.ring(), m2)), std::invalid_argument);
  const std::vector<std::uint32_t> v = {1u, 0u};
  const Space e = projective_bundle(z, BundleChars::from_masks(z.ring(), v));
  EXPECT_THROW(projective_bundle(e, BundleChars::from_masks(e.ring(), m2)), std::invalid_argument);
}

TEST(Gysin, PowersOfUGiveCompleteHomogeneous) {
  const Space z = rp_product({3, 2});
  const std::vector<std::uint32_t> masks = {1u, 2u, 3u};
  const BundleChars chars = BundleChars::from_masks(z.ring(), masks);
  const Space e = projective_bundle(z, chars);
  const F2Poly u = F2Poly::variable(e.ring(), e.ring()->num_vars() - 1);
  for (int j = 0; j <= z.dim(); ++j) {
    const F2Poly push = gysin_pushforward(e, pow(u, static_cast<std::uint64_t>(2 + j)));
    const F2Poly h = complete_homogeneous(chars.characters, j, z.ring());
    ASSERT_TRUE(same_ring(*push.ring(), *z.ring()));
    EXPECT_EQ(push.support(), h.support()) << j;
  }
  for (int j = 0; j < 2; ++j) EXPECT_TRUE(gysin_pushforward(e, pow(u, static_cast<std::uint64_t>(j))).is_zero());
}

TEST(Gysin, BaseLinearAndCompatibleWithIntegration) {
  std::mt19937_64 rng(77);
  const Space z = rp_product({2, 2});
  const std::vector<std::uint32_t> masks = {1u, 3u, 0u, 2u};
  const Space e = projective_bundle(z, BundleChars::from_masks(z.ring(), masks), 2);
  for (int s = 0; s < 300; ++s) {
    const F2Poly b = oracle::random_element(z.ring(), rng);
    const F2Poly c = oracle::random_element(e.ring(), rng);
    const F2Poly lhs = gysin_pushforward(e, bundle_pullback(e, b) * c);
    const F2Poly rhs = F2Poly(lhs.ring(), b.support()) * gysin_pushforward(e, c);
    ASSERT_EQ(lhs.support(), rhs.support());
    ASSERT_EQ(integrate(e, c), integrate(z, F2Poly(z.ring(), gysin_pushforward(e, c).support())));
  }
}

TEST(Product, NumbersFollowWhitneyProduct) {
  const std::vector<std::string> specs = {"rp:2", "rp:4", "hyp:2,4", "rp:3", "bundle:base=rp:2;A=g1,0;B=0,0", "rp:1,2"};
  for (const auto& a : specs) {
    for (const auto& b : specs) {
      const Space x = parse_space(a), y = parse_space(b);
      if (x.dim() + y.dim() > 10) continue;
      const Space p = product(x, y);
      EXPECT_EQ(p.dim(), x.dim() + y.dim());
      EXPECT_EQ(number_vector(p), product_numbers(number_vector(x), number_vector(y))) << a << " * " << b;
    }
  }
}

TEST(Product, GroupingDoesNotMatter) {
  const Space a = parse_space("rp:2"), b = parse_space("hyp:1,2"), c = parse_space("rp:1");
  const Space left = product(product(a, b), c);
  const Space right = product(a, product(b, c));
  EXPECT_TRUE(same_ring(*left.ring(), *right.ring()));
  EXPECT_EQ(number_vector(left), number_vector(right));
  EXPECT_EQ(left.spec(), "rp:2*hyp:1,2*rp:1");
}

TEST(Parser, RoundTrips) {
  for (const std::string spec :
       {"pt", "rp:4", "rp:2,2", "hyp:2,4", "bundle:base=rp:2,1;A=g1,g2;B=0,0", "bundle:base=pt;V=0,0,0,0",
        "bundle:base=rp:3,2,1;V=g1+g2,g3,0", "rp:2*hyp:1,2*bundle:base=rp:1;A=g1,0;B=g1,0"}) {
    EXPECT_EQ(parse_space(spec).spec(), spec);
    EXPECT_EQ(format_factors(parse_factors(spec)), spec);
  }
  EXPECT_EQ(parse_space("bundle:base=rp:2;V=g,0").spec(), "bundle:base=rp:2;V=g1,0");
}

TEST(Parser, ErrorsNameTheToken) {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"rp:2,x", "x"},
      {"foo:1", "foo"},
      {"bundle:base=rp:2;V=g3,0", "g3"},
      {"rp:0", "0"},
      {"hyp:1", "1"},
      {"", ""},
      {"rp:2**rp:1", "rp:2**rp:1"},
      {"bundle:base=rp:2;V=g1", "base=rp:2;V=g1"},
      {"bundle:base=hyp:1,2;V=0,0", "hyp:1,2"},
      {"rp", "rp"},
      {"bundle:base=rp:2;V=g1+g1,0", "g1+g1"},
      {"bundle:base=rp:2;X=0,0", "base=rp:2;X=0,0"},
  };
  for (const auto& [text, token] : cases) {
    try {
      parse_space(text);
      ADD_FAILURE() << "accepted " << text;
    } catch (const SpecError& e) {
      EXPECT_EQ(e.token(), token) << text;
    }
  }
}

TEST(Parser, CharacterHelpers) {
  EXPECT_EQ(parse_character("g1+g3", 3), 5u);
  EXPECT_EQ(parse_character("0", 0), 0u);
  EXPECT_EQ(parse_character("g", 1), 1u);
  EXPECT_EQ(format_character(5u), "g1+g3");
  EXPECT_EQ(format_character(0u), "0");
  EXPECT_THROW(parse_character("g2", 1), SpecError);
}
