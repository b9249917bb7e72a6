#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "circle5/abgroup.hpp"
#include "circle5/classify.hpp"
#include "circle5/cohomology.hpp"
#include "circle5/error.hpp"
#include "circle5/seifert.hpp"

namespace circle5 {

/// Target class Z^k + torsion with Wu invariant `target`.
struct ConstructionInput {
  std::size_t k = 0;
  TorsionCounts counts;
  WuInvariant target;

  FiveManifoldClass as_class() const;
};

/// ConstructionInput from a class: k is the free rank of H2.
ConstructionInput input_from_class(const FiveManifoldClass& c);

/// Thrown for inputs the gate rejects; carries the verdict.
class InadmissibleInput : public InputError {
 public:
  explicit InadmissibleInput(GateVerdict verdict);
  const GateVerdict& verdict() const { return verdict_; }

 private:
  GateVerdict verdict_;
};

/// One divisor slot D_{p,j}; m = 1 means the slot is empty.
struct Slot {
  BigInt m = 1;
  SurfaceType surface = Orientable{0};
};

/// Row p holds the slots D_{p,0} .. D_{p,k}, one per CP^2 summand.
struct Schedule {
  std::size_t k = 0;
  std::map<BigInt, std::vector<Slot>> rows;
};

/// Per prime, the powers p^e with c(p^e) > 0 sorted increasingly and padded
/// with 1s on the left, genus c(p^e)/2. Without 2-torsion a genus 0 divisor
/// of multiplicity 2 goes into the last chart. For target 1 the m = 2
/// divisor is nonorientable with b1 = c(2).
Schedule schedule(const ConstructionInput& input);

/// b_p = (m/m_p)^{-1} mod m_p, the unique solution of
/// sum_p b_p (m/m_p) = 1 mod m for pairwise coprime m_p with product m.
std::vector<BigInt> solve_congruence(const std::vector<BigInt>& moduli);

/// Orbit invariants laid out like the schedule: b = 1 in charts j < k,
/// the congruence solution in chart k.
std::map<BigInt, std::vector<BigInt>> solve_b(const Schedule& s);

/// h_k makes the chart k coordinate of c1(L/X) exactly 1/m(X); h_j in {0, -1}
/// for j < k fixes w2 mod 2 in that chart.
std::vector<BigInt> solve_twist(const Schedule& s, const std::map<BigInt, std::vector<BigInt>>& b,
                                WuInvariant target);

/// Composition of the three steps; divisors are emitted chart-major, primes
/// increasing within a chart.
SeifertSpec build(const ConstructionInput& input);

/// Thrown when a constructed spec does not have the requested invariants.
class RoundTripFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RoundTrip {
  SeifertSpec spec;
  CohomologyReport report;
};

/// Builds and recomputes every invariant. Throws RoundTripFailure on
/// H_1 != 0, H_2 not isomorphic to the input, or the wrong Wu invariant.
RoundTrip verify_roundtrip(const ConstructionInput& input);

}  // namespace circle5
