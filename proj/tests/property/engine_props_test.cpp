#include <gtest/gtest.h>

#include "circle5/cohomology.hpp"
#include "circle5/construct.hpp"
#include "../oracles/image_oracle.hpp"
#include "../support/generators.hpp"

using namespace circle5;

namespace {

std::vector<std::vector<std::int64_t>> columns(const RestrictionMap& map, std::size_t rank) {
  std::vector<std::vector<std::int64_t>> cols(rank);
  for (std::size_t l = 0; l < rank; ++l) {
    for (const auto& row : map.rows) cols[l].push_back(row[l].convert_to<std::int64_t>());
  }
  return cols;
}

std::vector<std::int64_t> moduli(const RestrictionMap& map) {
  std::vector<std::int64_t> m;
  for (const auto& x : map.moduli) m.push_back(x.convert_to<std::int64_t>());
  return m;
}

}  // namespace

TEST(SeifertProperty, ChernMuIntegralAndLinearInTwist) {
  gen::Rng rng(31);
  for (int n = 0; n < 300; ++n) {
    SeifertSpec s = gen::spec(rng, 10000, true);
    const auto c = chern_class(s);
    const auto mu = chern_mu(s);
    const BigInt m = orbifold_order(s);
    for (std::size_t j = 0; j < c.size(); ++j) ASSERT_EQ(c[j] * Rational(m), Rational(mu[j]));
    SeifertSpec t = s;
    std::vector<BigInt> shift(s.twist.size());
    for (std::size_t j = 0; j < shift.size(); ++j) {
      shift[j] = gen::uniform(rng, -4, 4);
      t.twist[j] += shift[j];
    }
    const auto ct = chern_class(t);
    for (std::size_t j = 0; j < c.size(); ++j) ASSERT_EQ(ct[j], c[j] + Rational(shift[j]));
    ASSERT_EQ(spec_from_json(to_json(s)), s);
  }
}

TEST(CohomologyProperty, SurjectivityMatchesImageSearch) {
  gen::Rng rng(32);
  int onto = 0, not_onto = 0;
  for (int n = 0; n < 300; ++n) {
    const SeifertSpec s = gen::spec(rng, 2000, true);
    if (s.divisors.empty()) continue;
    const RestrictionMap map = restriction_matrix(s);
    const bool want = oracle::surjective(columns(map, s.base.rank()), moduli(map));
    ASSERT_EQ(is_surjective(map), want);
    // The cokernel order is the index of the image.
    std::size_t total = 1;
    for (auto m : moduli(map)) total *= static_cast<std::size_t>(m);
    const std::size_t image = oracle::image_size(columns(map, s.base.rank()), moduli(map));
    ASSERT_EQ(restriction_cokernel(map).torsion_order(), BigInt(total / image));
    (want ? onto : not_onto)++;
  }
  EXPECT_GT(onto, 20);
  EXPECT_GT(not_onto, 20);
}

TEST(CohomologyProperty, ReportConsistency) {
  gen::Rng rng(33);
  int trivial = 0;
  for (int n = 0; n < 1500; ++n) {
    const SeifertSpec s = gen::spec(rng, 10000, n % 3 == 0);
    const CohomologyReport r = full_report(s);
    if (r.restriction_surjective) {
      BigInt d = 0;
      for (const auto& x : r.c1_mu) d = gcd(d, x);
      ASSERT_TRUE(r.h1.known);
      ASSERT_EQ(r.h1.order, d);
    } else {
      ASSERT_FALSE(r.h1.known);
    }
    ASSERT_EQ(r.h2.has_value(), r.h1.is_trivial());
    if (!r.h1.is_trivial()) continue;
    ++trivial;
    ASSERT_EQ(r.h2->free_rank(), s.base.rank() - 1);
    ASSERT_EQ(FgAbelianGroup(0, r.h2->torsion()), *r.h3_torsion);
    const WuAnalysis a = analyze_wu(s);
    ASSERT_EQ(a.value, *r.wu);
    ASSERT_TRUE(recheck_wu(s, a));
  }
  EXPECT_GT(trivial, 100);
}

TEST(ConstructProperty, RoundTripAndLaws) {
  gen::Rng rng(34);
  for (int n = 0; n < 150; ++n) {
    const ConstructionInput in = gen::admissible_input(rng);
    const SeifertSpec s = build(in);
    ASSERT_TRUE(validate(s).empty());
    ASSERT_EQ(build(in), s);
    const auto mu = chern_mu(s);
    ASSERT_EQ(mu.back(), 1);
    ASSERT_NO_THROW(verify_roundtrip(in));
  }
}

TEST(ConstructProperty, CongruenceRecheck) {
  gen::Rng rng(35);
  for (int n = 0; n < 300; ++n) {
    const auto tuple = gen::coprime_tuple(rng, 100000);
    std::vector<BigInt> m(tuple.begin(), tuple.end());
    const auto b = solve_congruence(m);
    std::int64_t prod = 1;
    for (auto x : tuple) prod *= x;
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      const auto bi = b[i].convert_to<std::int64_t>();
      ASSERT_GE(bi, 1);
      ASSERT_LT(bi, tuple[i]);
      ASSERT_EQ(std::gcd(bi, tuple[i]), 1);
      sum = (sum + bi * (prod / tuple[i])) % prod;
    }
    ASSERT_EQ(sum, 1 % prod);
  }
}
