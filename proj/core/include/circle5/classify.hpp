#pragma once

#include <compare>
#include <string>
#include <vector>

#include "circle5/abgroup.hpp"
#include "circle5/json_io.hpp"

namespace circle5 {

/// The Wu-type invariant i(M): a natural number or infinity.
///
/// Conventions: i = 0 means w2 vanishes; i = infinity means w2 is nonzero
/// but kills every torsion class; i = n >= 1 is the smallest order 2^n of a
/// torsion class on which w2 is nonzero.
class WuInvariant {
 public:
  constexpr WuInvariant() = default;
  static constexpr WuInvariant finite(unsigned n) { return WuInvariant(false, n); }
  static constexpr WuInvariant infinity() { return WuInvariant(true, 0); }

  constexpr bool is_infinite() const { return infinite_; }
  /// Throws InputError for infinity.
  unsigned value() const;

  friend constexpr bool operator==(const WuInvariant&, const WuInvariant&) = default;
  friend constexpr std::strong_ordering operator<=>(const WuInvariant& x, const WuInvariant& y) {
    if (x.infinite_ != y.infinite_) {
      return x.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return x.value_ <=> y.value_;
  }

 private:
  constexpr WuInvariant(bool infinite, unsigned value) : infinite_(infinite), value_(value) {}
  bool infinite_ = false;
  unsigned value_ = 0;
};

std::string to_string(WuInvariant i);
/// Wire encoding: a JSON integer or the string "inf".
Json to_json(WuInvariant i);
WuInvariant wu_from_json(const Json& j);
/// Parses "0", "7", "inf".
WuInvariant parse_wu(const std::string& text);

/// Second homology plus Wu invariant of a simply connected 5-manifold.
struct FiveManifoldClass {
  FgAbelianGroup h2;
  WuInvariant i;

  friend bool operator==(const FiveManifoldClass&, const FiveManifoldClass&) = default;
};

/// Group JSON plus `"i": n | "inf"`.
Json to_json(const FiveManifoldClass& c);
FiveManifoldClass class_from_json(const Json& j);

enum class GateRule {
  kPrimeCount,      // R1_PRIME_COUNT
  kWuRange,         // R2_WU_RANGE
  kSpinTwoCount,    // R3_SPIN_TWO_COUNT
  kNotRealizable,   // NOT_REALIZABLE
  kInvalidI,        // INVALID_I
};

std::string to_string(GateRule rule);

struct GateVerdict {
  bool admissible = false;
  std::vector<GateRule> violated_rules;  // empty iff admissible
};

Json to_json(const GateVerdict& v);

/// Whether i is a possible value of the invariant for a manifold with this H2.
bool validate_i(const FgAbelianGroup& h2, WuInvariant i);

/// Smale-Barden existence: H2 = Z^k + A + A with any w2, or
/// H2 = Z^k + A + A + Z/2 with w2 the projection to Z/2 (so i = 1).
bool smale_barden_realizable(const FiveManifoldClass& c);

/// Necessary and sufficient conditions for a fixed point free circle action
/// on the simply connected manifold of this class. Reports every violated
/// rule, not just the first.
GateVerdict circle_action_admissible(const FiveManifoldClass& c);

}  // namespace circle5
