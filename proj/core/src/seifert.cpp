#include "circle5/seifert.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace circle5 {

namespace mp = boost::multiprecision;

BigInt Divisor::first_betti() const {
  if (const auto* o = std::get_if<Orientable>(&surface)) return 2 * o->genus;
  return std::get<Nonorientable>(surface).b1;
}

std::vector<BigInt> Divisor::homology_class(std::size_t rank) const {
  if (h2_class) return *h2_class;
  std::vector<BigInt> v(rank);
  if (chart < rank) v[chart] = 1;
  return v;
}

bool Divisor::has_generator_class() const {
  if (!h2_class) return true;
  for (std::size_t l = 0; l < h2_class->size(); ++l) {
    if ((*h2_class)[l] != (l == chart ? 1 : 0)) return false;
  }
  return true;
}

std::string to_string(IssueKind kind) {
  switch (kind) {
    case IssueKind::kCoprimality:
      return "COPRIMALITY";
    case IssueKind::kBadOrbitInvariant:
      return "BAD_ORBIT_INVARIANT";
    case IssueKind::kNonorientableM:
      return "NONORIENTABLE_M";
    case IssueKind::kBadChart:
      return "BAD_CHART";
    case IssueKind::kBadMultiplicity:
      return "BAD_MULTIPLICITY";
    case IssueKind::kBadSurface:
      return "BAD_SURFACE";
    case IssueKind::kBadClass:
      return "BAD_CLASS";
    case IssueKind::kTwistLength:
      return "TWIST_LENGTH";
    case IssueKind::kNoCharts:
      return "NO_CHARTS";
  }
  return "UNKNOWN";
}

namespace {

std::string join_issues(const std::vector<ValidationIssue>& issues) {
  std::string out = "invalid Seifert spec:";
  for (const auto& issue : issues) out += " " + issue.detail;
  return out;
}

}  // namespace

SpecError::SpecError(std::vector<ValidationIssue> issues)
    : InputError(join_issues(issues)), issues_(std::move(issues)) {}

std::vector<ValidationIssue> validate(const SeifertSpec& spec) {
  std::vector<ValidationIssue> issues;
  auto report = [&](IssueKind kind, const std::string& args) {
    issues.push_back({kind, to_string(kind) + "(" + args + ")"});
  };
  const std::size_t rank = spec.base.charts;
  if (rank == 0) report(IssueKind::kNoCharts, "");
  if (spec.twist.size() != rank) {
    report(IssueKind::kTwistLength,
           std::to_string(spec.twist.size()) + " != " + std::to_string(rank));
  }
  for (std::size_t i = 0; i < spec.divisors.size(); ++i) {
    const Divisor& d = spec.divisors[i];
    const std::string idx = std::to_string(i);
    if (d.chart >= rank) report(IssueKind::kBadChart, idx);
    if (d.m < 2) {
      report(IssueKind::kBadMultiplicity, idx);
      continue;
    }
    if (d.b < 1 || d.b >= d.m || gcd(d.b, d.m) != 1) report(IssueKind::kBadOrbitInvariant, idx);
    if (const auto* o = std::get_if<Orientable>(&d.surface)) {
      if (o->genus < 0) report(IssueKind::kBadSurface, idx);
    } else {
      if (std::get<Nonorientable>(d.surface).b1 < 1) report(IssueKind::kBadSurface, idx);
      if (d.m != 2) report(IssueKind::kNonorientableM, idx);
    }
    if (d.h2_class && d.h2_class->size() != rank) report(IssueKind::kBadClass, idx);
  }
  // Divisors in one summand meet, so their multiplicities must be coprime.
  for (std::size_t i = 0; i < spec.divisors.size(); ++i) {
    for (std::size_t k = i + 1; k < spec.divisors.size(); ++k) {
      const Divisor& x = spec.divisors[i];
      const Divisor& y = spec.divisors[k];
      if (x.chart != y.chart || x.m < 2 || y.m < 2) continue;
      if (gcd(x.m, y.m) != 1) {
        report(IssueKind::kCoprimality,
               std::to_string(x.chart) + ", " + to_string(x.m) + ", " + to_string(y.m));
      }
    }
  }
  return issues;
}

void require_valid(const SeifertSpec& spec) {
  auto issues = validate(spec);
  if (!issues.empty()) throw SpecError(std::move(issues));
}

BigInt orbifold_order(const SeifertSpec& spec) {
  BigInt m = 1;
  for (const auto& d : spec.divisors) m = lcm(m, d.m);
  return m;
}

std::vector<Rational> chern_class(const SeifertSpec& spec) {
  require_valid(spec);
  const std::size_t rank = spec.base.rank();
  std::vector<Rational> c1(spec.twist.begin(), spec.twist.end());
  for (const auto& d : spec.divisors) {
    const auto cls = d.homology_class(rank);
    const Rational weight(d.b, d.m);
    for (std::size_t l = 0; l < rank; ++l) {
      if (cls[l] != 0) c1[l] += weight * Rational(cls[l]);
    }
  }
  return c1;
}

std::vector<BigInt> chern_mu(const SeifertSpec& spec) {
  const BigInt m = orbifold_order(spec);
  std::vector<BigInt> out;
  for (const auto& x : chern_class(spec)) {
    const Rational scaled = x * Rational(m);
    if (mp::denominator(scaled) != 1) {
      throw std::logic_error("chern_mu: m(X) c1 is not integral");
    }
    out.push_back(mp::numerator(scaled));
  }
  return out;
}

Json to_json(const SeifertSpec& spec) {
  Json divisors = Json::array();
  for (const auto& d : spec.divisors) {
    Json surface;
    if (const auto* o = std::get_if<Orientable>(&d.surface)) {
      surface["orientable"] = true;
      surface["genus"] = bigint_to_json(o->genus);
    } else {
      surface["orientable"] = false;
      surface["b1"] = bigint_to_json(std::get<Nonorientable>(d.surface).b1);
    }
    Json entry;
    entry["chart"] = d.chart;
    entry["surface"] = std::move(surface);
    entry["m"] = bigint_to_json(d.m);
    entry["b"] = bigint_to_json(d.b);
    if (d.h2_class) {
      Json cls = Json::array();
      for (const auto& x : *d.h2_class) cls.push_back(bigint_to_json(x));
      entry["class"] = std::move(cls);
    }
    divisors.push_back(std::move(entry));
  }
  Json twist = Json::array();
  for (const auto& h : spec.twist) twist.push_back(bigint_to_json(h));
  Json out;
  out["charts"] = spec.base.charts;
  out["divisors"] = std::move(divisors);
  out["twist"] = std::move(twist);
  return out;
}

namespace {

std::vector<BigInt> bigint_array(const Json& j, std::string_view what) {
  if (!j.is_array()) throw InputError("field '" + std::string(what) + "' must be an array");
  std::vector<BigInt> out;
  for (const auto& x : j) out.push_back(bigint_from_json(x, what));
  return out;
}

}  // namespace

SeifertSpec spec_from_json(const Json& j) {
  require_known_fields(j, "spec", {"charts", "divisors", "twist"});
  SeifertSpec spec;
  spec.base.charts = index_from_json(require_field(j, "spec", "charts"), "charts");
  const Json& divisors = require_field(j, "spec", "divisors");
  if (!divisors.is_array()) throw InputError("spec: 'divisors' must be an array");
  for (const auto& entry : divisors) {
    require_known_fields(entry, "divisor", {"chart", "surface", "m", "b", "class"});
    Divisor d;
    d.chart = index_from_json(require_field(entry, "divisor", "chart"), "chart");
    const Json& surface = require_field(entry, "divisor", "surface");
    require_known_fields(surface, "surface", {"orientable", "genus", "b1"});
    const Json& orientable = require_field(surface, "surface", "orientable");
    if (!orientable.is_boolean()) throw InputError("surface: 'orientable' must be a boolean");
    if (orientable.get<bool>()) {
      if (surface.contains("b1")) throw InputError("surface: unknown field 'b1' for an orientable surface");
      d.surface = Orientable{bigint_from_json(require_field(surface, "surface", "genus"), "genus")};
    } else {
      if (surface.contains("genus")) throw InputError("surface: unknown field 'genus' for a nonorientable surface");
      d.surface = Nonorientable{bigint_from_json(require_field(surface, "surface", "b1"), "b1")};
    }
    d.m = bigint_from_json(require_field(entry, "divisor", "m"), "m");
    d.b = bigint_from_json(require_field(entry, "divisor", "b"), "b");
    if (entry.contains("class")) d.h2_class = bigint_array(entry["class"], "class");
    spec.divisors.push_back(std::move(d));
  }
  spec.twist = bigint_array(require_field(j, "spec", "twist"), "twist");
  require_valid(spec);
  return spec;
}

}  // namespace circle5
