#include <gtest/gtest.h>

#include "circle5/cohomology.hpp"
#include "circle5/construct.hpp"

using namespace circle5;

namespace {

Divisor div(std::size_t chart, int m, int b, int genus = 0) {
  return Divisor{chart, Orientable{genus}, m, b, std::nullopt};
}

FgAbelianGroup group(std::size_t k, std::initializer_list<std::tuple<int, unsigned, int>> t) {
  TorsionCounts c;
  for (auto [p, e, n] : t) c[PrimePower(p, e)] = n;
  return FgAbelianGroup(k, c);
}

// k = 1, {(2,1):2, (3,1):2}, i = inf, as built by the construction.
SeifertSpec infinity_example() {
  return SeifertSpec{{2}, {div(1, 2, 1, 1), div(1, 3, 2, 1)}, {0, -1}};
}

}  // namespace

TEST(Restriction, Examples) {
  const auto one = restriction_matrix(SeifertSpec{{1}, {div(0, 5, 1)}, {0}});
  EXPECT_EQ(one.rows, (std::vector<std::vector<BigInt>>{{1}}));
  EXPECT_TRUE(is_surjective(one));

  const auto two = restriction_matrix(SeifertSpec{{1}, {div(0, 2, 1), div(0, 3, 1)}, {0}});
  EXPECT_EQ(two.moduli, (std::vector<BigInt>{2, 3}));
  EXPECT_TRUE(is_surjective(two));

  const auto diag = restriction_matrix(SeifertSpec{{2}, {div(0, 3, 1), div(1, 3, 1)}, {0, 0}});
  EXPECT_EQ(diag.rows, (std::vector<std::vector<BigInt>>{{1, 0}, {0, 1}}));
  EXPECT_TRUE(is_surjective(diag));
}

TEST(Restriction, NotSurjective) {
  Divisor a = div(0, 2, 1), b = div(1, 2, 1);
  a.h2_class = b.h2_class = std::vector<BigInt>{1, 1};
  const SeifertSpec s{{2}, {a, b}, {0, 0}};
  const auto map = restriction_matrix(s);
  EXPECT_FALSE(is_surjective(map));
  EXPECT_EQ(restriction_cokernel(map), group(0, {{2, 1, 1}}));
  const H1Order h1 = h1_order(s);
  EXPECT_FALSE(h1.known);
  EXPECT_EQ(*h1.lower_bound, group(0, {{2, 1, 1}}));
  EXPECT_FALSE(h1.is_trivial());
}

TEST(H1Order, Examples) {
  EXPECT_EQ(h1_order(SeifertSpec{{1}, {div(0, 5, 1)}, {0}}).order, 1);
  EXPECT_EQ(h1_order(SeifertSpec{{1}, {div(0, 3, 1)}, {1}}).order, 4);
  EXPECT_EQ(h1_order(SeifertSpec{{1}, {}, {1}}).order, 1);
  // c1 = 0: the product S^1 x CP^2, H_1 infinite.
  EXPECT_EQ(h1_order(SeifertSpec{{1}, {}, {0}}).order, 0);
}

TEST(H2Group, Examples) {
  EXPECT_EQ(h2_group(SeifertSpec{{1}, {div(0, 5, 1, 2)}, {0}}), group(0, {{5, 1, 4}}));
  EXPECT_TRUE(h2_group(SeifertSpec{{1}, {div(0, 7, 1, 0)}, {0}}).is_trivial());
  EXPECT_EQ(h2_group(infinity_example()), group(1, {{2, 1, 2}, {3, 1, 2}}));
  EXPECT_EQ(h3_torsion(infinity_example()), group(0, {{2, 1, 2}, {3, 1, 2}}));
  EXPECT_THROW(h2_group(SeifertSpec{{1}, {div(0, 3, 1)}, {1}}), InputError);
}

TEST(H2Group, NonorientableAndCompositeMultiplicity) {
  // c1_mu = 30 (-1 + 1/2 + 7/15) = -1.
  const SeifertSpec s{{1}, {Divisor{0, Nonorientable{3}, 2, 1, std::nullopt}, div(0, 15, 7, 1)}, {-1}};
  EXPECT_EQ(h2_group(s), group(0, {{2, 1, 3}, {3, 1, 2}, {5, 1, 2}}));
}

TEST(W2Class, Examples) {
  EXPECT_EQ(w2_class(SeifertSpec{{1}, {div(0, 5, 1)}, {0}}), Gf2Vector{0});
  EXPECT_EQ(w2_class(SeifertSpec{{1}, {div(0, 2, 1), div(0, 5, 3)}, {-1}}), Gf2Vector{0});
  EXPECT_EQ(w2_class(SeifertSpec{{1}, {}, {1}}), Gf2Vector{0});
  EXPECT_EQ(w2_class(infinity_example()), (Gf2Vector{1, 1}));
  EXPECT_THROW(w2_class(SeifertSpec{{1}, {Divisor{0, Nonorientable{1}, 2, 1, std::nullopt}}, {0}}),
               InputError);
}

TEST(WuInvariant, Examples) {
  const SeifertSpec non{{1}, {Divisor{0, Nonorientable{1}, 2, 1, std::nullopt}}, {0}};
  EXPECT_EQ(wu_invariant(non), WuValue::kOne);

  const SeifertSpec zero{{1}, {div(0, 2, 1, 0), div(0, 5, 3, 2)}, {-1}};
  EXPECT_EQ(wu_invariant(zero), WuValue::kZero);

  const WuAnalysis inf = analyze_wu(infinity_example());
  EXPECT_EQ(inf.value, WuValue::kInfinity);
  ASSERT_TRUE(inf.infinity);
  EXPECT_EQ(inf.infinity->representative, (Gf2Vector{1, 1}));
  EXPECT_TRUE(recheck_wu(infinity_example(), inf));
}

TEST(WuInvariant, SeveralEvenCharts) {
  // Two charts carry 2-power multiplicities; the certificate lives on the
  // even-free chart 0 alone.
  const ConstructionInput in{2, {{PrimePower(2, 1), 2}, {PrimePower(2, 2), 2}}, WuInvariant::infinity()};
  const SeifertSpec s = build(in);
  const WuAnalysis a = analyze_wu(s);
  EXPECT_EQ(a.value, WuValue::kInfinity);
  ASSERT_TRUE(a.infinity);
  EXPECT_EQ(a.infinity->charts, (std::vector<bool>{true, false, false}));
  EXPECT_TRUE(recheck_wu(s, a));
}

TEST(WuInvariant, RecheckRejectsForgedCertificates) {
  const SeifertSpec s = infinity_example();
  WuAnalysis a = analyze_wu(s);
  a.infinity->representative = {0, 1};  // H_1 is in the kernel
  EXPECT_FALSE(recheck_wu(s, a));

  WuAnalysis z = analyze_wu(s);
  z.value = WuValue::kZero;
  EXPECT_FALSE(recheck_wu(s, z));

  const SeifertSpec zero{{1}, {div(0, 2, 1, 0), div(0, 5, 3, 2)}, {-1}};
  WuAnalysis w = analyze_wu(zero);
  EXPECT_TRUE(recheck_wu(zero, w));
  w.value = WuValue::kOne;
  EXPECT_FALSE(recheck_wu(zero, w));
}

TEST(WuInvariant, RequiresTrivialH1) {
  EXPECT_THROW(wu_invariant(SeifertSpec{{1}, {div(0, 3, 1)}, {1}}), InputError);
}

TEST(SimplyConnected, Examples) {
  EXPECT_TRUE(simply_connected(SeifertSpec{{1}, {div(0, 5, 1)}, {0}}));
  EXPECT_FALSE(simply_connected(SeifertSpec{{1}, {div(0, 3, 1)}, {1}}));
  EXPECT_TRUE(simply_connected(SeifertSpec{{1}, {}, {1}}));
  Divisor d = div(0, 3, 1);
  d.h2_class = std::vector<BigInt>{1, 1};
  EXPECT_THROW(simply_connected(SeifertSpec{{2}, {d}, {0, 0}}), InputError);
}

TEST(FullReport, Json) {
  const CohomologyReport r = full_report(SeifertSpec{{1}, {div(0, 2, 1, 0), div(0, 5, 3, 2)}, {-1}});
  EXPECT_EQ(to_json(r).dump(),
            R"({"h1_order":1,"restriction_surjective":true,"h2":{"free_rank":0,"torsion":[{"p":5,"e":1,"count":4}]},)"
            R"("h3_torsion":{"free_rank":0,"torsion":[{"p":5,"e":1,"count":4}]},"c1":["1/10"],"c1_mu":[1],)"
            R"("orbifold_order":10,"wu":0,"simply_connected":true})");

  const CohomologyReport bad = full_report(SeifertSpec{{1}, {div(0, 3, 1)}, {1}});
  const Json j = to_json(bad);
  EXPECT_EQ(j["h1_order"], 4);
  EXPECT_TRUE(j["h2"].is_null());
  EXPECT_TRUE(j["wu"].is_null());
  EXPECT_EQ(j["simply_connected"], false);
}
