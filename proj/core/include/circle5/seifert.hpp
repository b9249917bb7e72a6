#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "circle5/error.hpp"
#include "circle5/gf2.hpp"
#include "circle5/json_io.hpp"
#include "circle5/numtheory.hpp"

namespace circle5 {

/// The base X = (k+1)#CP^2. H^2(X, Z) has basis H_0..H_k (the line class of
/// each summand), the intersection form is the identity and, by the Wu
/// formula w2.x = x.x, w2(X) is the all-ones vector mod 2.
struct BaseSurface {
  std::size_t charts = 1;

  std::size_t rank() const { return charts; }
  Gf2Vector w2() const { return Gf2Vector(charts, 1); }

  friend bool operator==(const BaseSurface&, const BaseSurface&) = default;
};

struct Orientable {
  BigInt genus;
  friend bool operator==(const Orientable&, const Orientable&) = default;
};

/// b1 = dim H_1(D, Z/2), the number of crosscaps.
struct Nonorientable {
  BigInt b1;
  friend bool operator==(const Nonorientable&, const Nonorientable&) = default;
};

using SurfaceType = std::variant<Orientable, Nonorientable>;

/// A branch divisor D with orbit invariant (m, b), lying in one CP^2 summand.
struct Divisor {
  std::size_t chart = 0;
  SurfaceType surface = Orientable{0};
  BigInt m;
  BigInt b;
  /// Homology class in the H_j basis; absent means the line class H_chart.
  std::optional<std::vector<BigInt>> h2_class;

  bool orientable() const { return std::holds_alternative<Orientable>(surface); }
  /// dim H^1(D, Z/m) contribution: 2g, or b1 for nonorientable surfaces.
  BigInt first_betti() const;
  std::vector<BigInt> homology_class(std::size_t rank) const;
  bool has_generator_class() const;

  friend bool operator==(const Divisor&, const Divisor&) = default;
};

/// Seifert bundle M(B, sum (b_i/m_i) D_i) -> (k+1)#CP^2 with c1(B) = twist.
struct SeifertSpec {
  BaseSurface base;
  std::vector<Divisor> divisors;
  std::vector<BigInt> twist;

  friend bool operator==(const SeifertSpec&, const SeifertSpec&) = default;
};

enum class IssueKind {
  kCoprimality,         // COPRIMALITY(chart, m1, m2)
  kBadOrbitInvariant,   // BAD_ORBIT_INVARIANT(i)
  kNonorientableM,      // NONORIENTABLE_M(i)
  kBadChart,            // BAD_CHART(i)
  kBadMultiplicity,     // BAD_MULTIPLICITY(i)
  kBadSurface,          // BAD_SURFACE(i)
  kBadClass,            // BAD_CLASS(i)
  kTwistLength,         // TWIST_LENGTH
  kNoCharts,            // NO_CHARTS
};

struct ValidationIssue {
  IssueKind kind;
  std::string detail;  // e.g. "COPRIMALITY(0, 2, 4)"
};

std::string to_string(IssueKind kind);

/// Thrown when a spec fails validation; carries every issue found.
class SpecError : public InputError {
 public:
  explicit SpecError(std::vector<ValidationIssue> issues);
  const std::vector<ValidationIssue>& issues() const { return issues_; }

 private:
  std::vector<ValidationIssue> issues_;
};

/// Every violated invariant; empty when the spec is valid.
std::vector<ValidationIssue> validate(const SeifertSpec& spec);
/// Throws SpecError when validate() reports anything.
void require_valid(const SeifertSpec& spec);

/// m(X): lcm of the multiplicities, 1 without divisors.
BigInt orbifold_order(const SeifertSpec& spec);

/// c1(L/X) = twist + sum (b_i/m_i) [D_i], in the H_j basis.
std::vector<Rational> chern_class(const SeifertSpec& spec);

/// c1(L/mu) = m(X) c1(L/X); integral.
std::vector<BigInt> chern_mu(const SeifertSpec& spec);

/// `{"charts": n, "divisors": [...], "twist": [...]}` in canonical order.
Json to_json(const SeifertSpec& spec);
/// Strict: unknown or missing fields and invariant violations throw.
SeifertSpec spec_from_json(const Json& j);

}  // namespace circle5
