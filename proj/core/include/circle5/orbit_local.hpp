#pragma once

#include <span>
#include <vector>

#include "circle5/json_io.hpp"
#include "circle5/numtheory.hpp"

namespace circle5 {

/// Faithful orientation-preserving action of Z/m on C^r by
/// z_i -> e^{2 pi i j_i / m} z_i, the slice representation at an orbit.
class StabilizerRep {
 public:
  /// Requires m >= 1, 1 <= j_i < m and gcd(j_1, ..., j_r, m) = 1.
  StabilizerRep(BigInt m, std::vector<BigInt> exponents);

  const BigInt& order() const { return m_; }
  const std::vector<BigInt>& exponents() const { return exponents_; }

  /// Representative up to reordering and the orientation flip of each
  /// coordinate: every exponent replaced by min(j, m - j), then sorted.
  StabilizerRep canonical() const;

  friend bool operator==(const StabilizerRep&, const StabilizerRep&) = default;

 private:
  BigInt m_;
  std::vector<BigInt> exponents_;
};

struct LocalInvariants {
  std::vector<BigInt> c;  // c_i = gcd(m, j_k for k != i)
  std::vector<BigInt> d;  // d_i = j_i c_i / C
  BigInt C;               // product of the c_i; divides m
  bool manifold_point = false;  // quotient is a manifold here iff m == C
};

LocalInvariants local_invariants(const StabilizerRep& rep);

/// Codimension-two orbit invariant (m, b) with b j = 1 mod m.
struct OrbitInvariant {
  /// Requires m >= 2, 1 <= b < m, gcd(b, m) = 1.
  OrbitInvariant(BigInt m, BigInt b);

  BigInt m;
  BigInt b;

  friend bool operator==(const OrbitInvariant&, const OrbitInvariant&) = default;
};

/// b = j^{-1} mod m. Throws InputError unless gcd(j, m) = 1.
OrbitInvariant orbit_invariant_from_rep(const BigInt& m, const BigInt& j);

/// Inverse of the local classification when the quotient is smooth: from
/// pairwise coprime (c_i, b_i) rebuild m = prod c_i and exponents with
/// j_i = b_i^{-1} mod c_i and c_k | j_i for k != i.
StabilizerRep reconstruct_rep(std::span<const OrbitInvariant> invariants);

Json to_json(const LocalInvariants& inv);

}  // namespace circle5
