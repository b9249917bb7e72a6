#pragma once

#include <optional>
#include <string>
#include <vector>

#include "circle5/abgroup.hpp"
#include "circle5/gf2.hpp"
#include "circle5/json_io.hpp"
#include "circle5/seifert.hpp"

namespace circle5 {

/// H^2(X, Z) -> sum_i H^2(D_i, Z/m_i): row i holds H_l . [D_i] mod m_i.
struct RestrictionMap {
  std::vector<std::vector<BigInt>> rows;
  std::vector<BigInt> moduli;
};

RestrictionMap restriction_matrix(const SeifertSpec& spec);

/// Surjective iff for every prime p dividing a modulus, the rows with
/// p | m_i are linearly independent mod p.
bool is_surjective(const RestrictionMap& map);

/// Cokernel of Z^{k+1} -> sum Z/m_i.
FgAbelianGroup restriction_cokernel(const RestrictionMap& map);

/// |H_1(L, Z)|. When the restriction map is onto, the order is the gcd d of
/// the coordinates of c1(L/mu), with d = 0 meaning H_1 is infinite. Otherwise
/// H_1 is only known to surject onto the cokernel, which is kept as a witness.
struct H1Order {
  bool known = true;
  BigInt order;
  std::optional<FgAbelianGroup> lower_bound;

  bool is_trivial() const { return known && order == 1; }
};

H1Order h1_order(const SeifertSpec& spec);

/// Z^k + sum_i (Z/m_i)^{beta_i}, beta_i = 2g or b1. Requires H_1 = 0.
FgAbelianGroup h2_group(const SeifertSpec& spec);
/// sum_i (Z/m_i)^{beta_i}. Requires H_1 = 0.
FgAbelianGroup h3_torsion(const SeifertSpec& spec);

/// w2(X) + sum b_i [D_i] + c1(B) mod 2, whose pullback is w2(L). Requires
/// every divisor orientable.
Gf2Vector w2_class(const SeifertSpec& spec);

enum class WuValue { kZero, kOne, kInfinity, kIndeterminate };

std::string to_string(WuValue v);

/// Evidence that f^* w2 != 0 mod 2.
///
/// `charts` selects a sub-connected-sum Y of the base carrying at most one
/// even multiplicity, so the pullback to the bundle over Y has kernel exactly
/// <c1(M/mu) mod 2>. `representative` differs from w2 by an element of the
/// certified kernel, lives on Y and is outside <c1(M/mu) mod 2>.
struct InfinityCertificate {
  std::vector<bool> charts;
  Gf2Vector representative;
  Gf2Vector sub_chern_mu;  // c1(M/mu) of the bundle over Y, mod 2
};

struct WuAnalysis {
  WuValue value = WuValue::kIndeterminate;
  Gf2Vector w2;                               // empty when decided by rule (a)
  std::vector<Gf2Vector> kernel_generators;   // c1(L/mu) and even-m divisors, mod 2
  std::optional<InfinityCertificate> infinity;
};

/// Decides i(L) in {0, 1, inf} where a certificate exists:
///   (a) a nonorientable divisor gives 1;
///   (b) w2 in the certified kernel K2 gives 0;
///   (c) an InfinityCertificate gives infinity;
///   (d) otherwise indeterminate.
/// Requires H_1 = 0.
WuAnalysis analyze_wu(const SeifertSpec& spec);
WuValue wu_invariant(const SeifertSpec& spec);

/// Re-validates the certificate behind a 0 / 1 / infinity answer with rank
/// computations independent of analyze_wu's elimination.
bool recheck_wu(const SeifertSpec& spec, const WuAnalysis& analysis);

/// pi_1(L) = 1 iff H_1(L) = 0 for the standard arrangements, where every
/// divisor is a generator of its summand. Throws InputError otherwise.
bool simply_connected(const SeifertSpec& spec);

struct CohomologyReport {
  H1Order h1;
  bool restriction_surjective = false;
  std::optional<FgAbelianGroup> h2;          // present iff H_1 = 0
  std::optional<FgAbelianGroup> h3_torsion;  // present iff H_1 = 0
  std::vector<Rational> c1;
  std::vector<BigInt> c1_mu;
  BigInt orbifold_order;
  std::optional<WuValue> wu;                 // present iff H_1 = 0
  std::optional<bool> simply_connected;      // absent for non-generator classes
};

CohomologyReport full_report(const SeifertSpec& spec);

Json to_json(const CohomologyReport& report);

}  // namespace circle5
