#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "circle5/json_io.hpp"
#include "circle5/numtheory.hpp"

namespace circle5 {

/// Default exception budget: at most 5 singular points on the
/// orbifold base, each on at most 2 branch curves that are not quadratic in
/// their degree.
inline constexpr std::size_t kSingularCurveBudget = 10;

/// q(t) = a t^2 + b t + c with a >= 1.
struct Quadratic {
  BigInt a = 1;
  BigInt b = 0;
  BigInt c = 0;

  BigInt operator()(const BigInt& t) const { return (a * t + b) * t + c; }
  /// Whether v = q(t) for some integer t.
  bool covers(const BigInt& v) const;
  BigInt discriminant() const { return b * b - 4 * a * c; }

  friend bool operator==(const Quadratic&, const Quadratic&) = default;
};

Json to_json(const Quadratic& q);
std::string to_string(const Quadratic& q);

/// An interval [lo, hi] of the sorted distinct values holding more elements
/// than 12 + 2 sqrt(hi - lo).
struct DensityViolation {
  BigInt lo;
  BigInt hi;
  std::size_t count = 0;
  double bound = 0;  // 12 + 2 sqrt(hi - lo), for display; the test is exact
};

/// Checks every interval spanned by two distinct values and returns the one
/// exceeding the bound by the largest margin (earliest on ties), or nothing.
std::optional<DensityViolation> interval_density_check(const std::vector<BigInt>& values);

/// |q(Z) n [lo, hi]| by enumerating the bounded preimage. Throws
/// std::logic_error if the count exceeds 2 + 2 sqrt((hi - lo)/a).
std::size_t quadratic_interval_count(const Quadratic& q, const BigInt& lo, const BigInt& hi);

struct CoverWitness {
  Quadratic q;
  std::vector<BigInt> exceptions;  // uncovered distinct values, increasing
};

struct CoverSearch {
  enum class Status { kFound, kNone, kInconclusive };
  Status status = Status::kNone;
  std::optional<CoverWitness> witness;
  std::vector<BigInt> window;       // the values whose triples were interpolated
  std::size_t triples = 0;
  std::size_t candidates = 0;       // interpolation candidates examined (or required)
};

/// Complete search for a quadratic covering all but max_exceptions of the
/// distinct values.
///
/// If q covers all but E values, it covers three of the E + 3 smallest.
/// Shifting t so the smallest of these sits at t = 0 gives c = v1, and
/// t2 | v2 - v1, t3 | v3 - v1, so q is the interpolant through one of the
/// finitely many divisor choices. Every candidate is normalized to
/// c = smallest covered value, b <= 0 (via t -> +-t + s) and ranked by
/// (exceptions, a, |discriminant|, |b|, c). Sets with fewer than three values
/// take a = 1 directly. More than max_candidates interpolations make the
/// result inconclusive.
CoverSearch quadratic_cover_search(const std::vector<BigInt>& values,
                                   std::size_t max_exceptions = kSingularCurveBudget,
                                   std::size_t max_candidates = 2'000'000);

/// Genus of a smooth plane curve of degree d: (d-1)(d-2)/2.
BigInt adjunction_genus(const BigInt& d);

struct SasakiOptions {
  std::size_t max_exceptions = kSingularCurveBudget;
  std::size_t max_candidates = 2'000'000;
};

struct SasakiReport {
  enum class Status { kFeasible, kInfeasible, kInconclusive };
  Status status = Status::kFeasible;
  std::optional<CoverWitness> witness;
  std::optional<DensityViolation> densest_violation;
  std::optional<CoverSearch> search;    // absent when the density check decided
  std::vector<BigInt> duplicates_dropped;
  std::size_t max_exceptions = kSingularCurveBudget;
};

std::string to_string(SasakiReport::Status s);

/// Necessary condition only: density check, then the cover search. A
/// feasible report means no obstruction was found.
SasakiReport sasaki_check(const std::vector<BigInt>& values, const SasakiOptions& options = {});

Json to_json(const SasakiReport& r);

/// Smallest k in 1..k_max for which family(k) is reported infeasible.
struct Threshold {
  std::optional<std::size_t> first_infeasible;
  std::optional<std::size_t> first_inconclusive;
};

Threshold exact_search_threshold(const std::function<std::vector<BigInt>(std::size_t)>& family,
                                 std::size_t k_max, const SasakiOptions& options = {});

}  // namespace circle5
