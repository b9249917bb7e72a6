#include <gtest/gtest.h>

#include "circle5/abgroup.hpp"
#include "circle5/error.hpp"

using namespace circle5;

namespace {

FgAbelianGroup group(std::size_t k, std::initializer_list<std::tuple<int, unsigned, int>> t) {
  TorsionCounts c;
  for (auto [p, e, n] : t) c[PrimePower(p, e)] = n;
  return FgAbelianGroup(k, c);
}

void expect_valid_snf(const IntMatrix& a) {
  const SmithForm s = smith_normal_form(a);
  EXPECT_EQ(s.U * a * s.V, s.D);
  EXPECT_EQ(abs(s.U.determinant()), 1);
  EXPECT_EQ(abs(s.V.determinant()), 1);
}

}  // namespace

TEST(SmithNormalForm, Identity) {
  const auto s = smith_normal_form(IntMatrix::identity(3));
  EXPECT_EQ(s.D, IntMatrix::identity(3));
  EXPECT_EQ(s.U, IntMatrix::identity(3));
  EXPECT_EQ(s.V, IntMatrix::identity(3));
}

TEST(SmithNormalForm, TwoByTwo) {
  const IntMatrix a = IntMatrix::from_rows({{2, 4}, {6, 8}});
  const auto s = smith_normal_form(a);
  EXPECT_EQ(s.diagonal(), (std::vector<BigInt>{2, 4}));
  expect_valid_snf(a);
}

TEST(SmithNormalForm, Zero) {
  const IntMatrix z(2, 2);
  const auto s = smith_normal_form(z);
  EXPECT_EQ(s.D, z);
  EXPECT_EQ(s.U, IntMatrix::identity(2));
  EXPECT_EQ(s.V, IntMatrix::identity(2));
}

TEST(SmithNormalForm, DivisibilityRepair) {
  // diag(2, 3) must become diag(1, 6).
  const IntMatrix a = IntMatrix::from_rows({{2, 0}, {0, 3}});
  EXPECT_EQ(smith_normal_form(a).diagonal(), (std::vector<BigInt>{1, 6}));
  expect_valid_snf(a);
}

TEST(SmithNormalForm, RectangularAndEmpty) {
  expect_valid_snf(IntMatrix::from_rows({{3, 6, 9}, {2, 4, 8}}));
  EXPECT_THROW(smith_normal_form(IntMatrix()), InputError);
}

TEST(PrimaryDecomposition, Examples) {
  const std::vector<BigInt> f12{12};
  EXPECT_EQ(primary_decomposition(f12), group(0, {{2, 2, 1}, {3, 1, 1}}).torsion());
  EXPECT_TRUE(primary_decomposition(std::vector<BigInt>{}).empty());
  const std::vector<BigInt> f22{2, 2};
  EXPECT_EQ(primary_decomposition(f22), group(0, {{2, 1, 2}}).torsion());
  const std::vector<BigInt> bad{1};
  EXPECT_THROW(primary_decomposition(bad), InputError);
}

TEST(PrimePower, RejectsComposites) {
  EXPECT_THROW(PrimePower(4, 1), InputError);
  EXPECT_THROW(PrimePower(3, 0), InputError);
}

TEST(FgAbelianGroup, Isomorphism) {
  EXPECT_TRUE(is_isomorphic(FgAbelianGroup(2, {}), FgAbelianGroup(2, {})));
  EXPECT_FALSE(is_isomorphic(group(0, {{5, 1, 4}}), group(0, {{5, 2, 2}})));
  const std::vector<BigInt> f{4, 3};
  EXPECT_TRUE(is_isomorphic(FgAbelianGroup::from_invariant_factors(0, f),
                            group(0, {{2, 2, 1}, {3, 1, 1}})));
}

TEST(FgAbelianGroup, InvariantFactorsAndOrder) {
  const auto g = group(1, {{2, 1, 2}, {2, 2, 1}, {3, 1, 1}});
  EXPECT_EQ(g.invariant_factors(), (std::vector<BigInt>{2, 2, 12}));
  EXPECT_EQ(g.torsion_order(), 48);
  EXPECT_EQ(g.exponents_of(2), (std::vector<unsigned>{1, 2}));
  EXPECT_EQ(to_string(g), "Z^1 + (Z/2)^2 + Z/2^2 + Z/3");
  EXPECT_EQ(to_string(FgAbelianGroup()), "0");
}

TEST(FgAbelianGroup, Cokernels) {
  EXPECT_TRUE(group_from_cokernel(IntMatrix::identity(2)).is_trivial());
  EXPECT_EQ(group_from_cokernel(IntMatrix::from_rows({{2, 0}, {0, 0}})), group(1, {{2, 1, 1}}));
  EXPECT_EQ(group_from_cokernel(IntMatrix::from_rows({{6}})), group(0, {{2, 1, 1}, {3, 1, 1}}));
  // More columns than rows, and more rows than columns.
  EXPECT_EQ(group_from_cokernel(IntMatrix::from_rows({{2, 3}})), FgAbelianGroup());
  EXPECT_EQ(group_from_cokernel(IntMatrix::from_rows({{2}, {0}})), group(1, {{2, 1, 1}}));
}

TEST(FgAbelianGroup, DirectSum) {
  EXPECT_EQ(group(1, {{2, 1, 1}}) + group(2, {{2, 1, 3}, {5, 1, 1}}),
            group(3, {{2, 1, 4}, {5, 1, 1}}));
}

TEST(FgAbelianGroup, JsonRoundTrip) {
  const auto g = group(2, {{3, 2, 1}, {2, 1, 5}});
  const Json j = to_json(g);
  EXPECT_EQ(j.dump(), R"({"free_rank":2,"torsion":[{"p":2,"e":1,"count":5},{"p":3,"e":2,"count":1}]})");
  EXPECT_EQ(group_from_json(j), g);
}

TEST(FgAbelianGroup, JsonRejectsBadInput) {
  EXPECT_THROW(group_from_json(Json::parse(R"({"free_rank":0,"torsion":[],"extra":1})")), InputError);
  EXPECT_THROW(group_from_json(Json::parse(R"({"free_rank":0,"torsion":[{"p":4,"e":1,"count":1}]})")),
               InputError);
  EXPECT_THROW(group_from_json(Json::parse(
                   R"({"free_rank":0,"torsion":[{"p":2,"e":1,"count":1},{"p":2,"e":1,"count":1}]})")),
               InputError);
  EXPECT_THROW(group_from_json(Json::parse(R"({"torsion":[]})")), InputError);
  // Big counts travel as strings.
  const auto g = group_from_json(Json::parse(
      R"({"free_rank":0,"torsion":[{"p":2,"e":1,"count":"100000000000000000000"}]})"));
  EXPECT_EQ(g.count(2, 1), BigInt("100000000000000000000"));
}
