#include "circle5/construct.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace circle5 {

namespace mp = boost::multiprecision;

FiveManifoldClass ConstructionInput::as_class() const {
  return FiveManifoldClass{FgAbelianGroup(k, counts), target};
}

ConstructionInput input_from_class(const FiveManifoldClass& c) {
  return ConstructionInput{c.h2.free_rank(), c.h2.torsion(), c.i};
}

namespace {

std::string verdict_message(const GateVerdict& v) {
  std::string msg = "inadmissible input:";
  for (auto r : v.violated_rules) msg += " " + to_string(r);
  return msg;
}

}  // namespace

InadmissibleInput::InadmissibleInput(GateVerdict verdict)
    : InputError(verdict_message(verdict)), verdict_(std::move(verdict)) {}

Schedule schedule(const ConstructionInput& input) {
  GateVerdict verdict = circle_action_admissible(input.as_class());
  if (!verdict.admissible) throw InadmissibleInput(std::move(verdict));

  Schedule s;
  s.k = input.k;
  const std::size_t len = input.k + 1;
  std::map<BigInt, std::vector<std::pair<unsigned, BigInt>>> powers;
  for (const auto& [pp, c] : input.counts) powers[pp.prime()].emplace_back(pp.exponent(), c);

  for (const auto& [p, list] : powers) {
    std::vector<Slot> row(len);
    // Map iteration gives increasing exponents; the gate bounds the length.
    std::size_t j = len - list.size();
    for (const auto& [e, c] : list) {
      Slot& slot = row[j++];
      slot.m = mp::pow(p, e);
      if (input.target == WuInvariant::finite(1) && p == 2 && e == 1) {
        slot.surface = Nonorientable{c};
      } else {
        slot.surface = Orientable{c / 2};
      }
    }
    s.rows.emplace(p, std::move(row));
  }
  if (!s.rows.contains(BigInt(2))) {
    std::vector<Slot> row(len);
    row.back().m = 2;
    s.rows.emplace(BigInt(2), std::move(row));
  }
  return s;
}

std::vector<BigInt> solve_congruence(const std::vector<BigInt>& moduli) {
  BigInt m = 1;
  for (const auto& mi : moduli) {
    if (mi < 1) throw InputError("solve_congruence: moduli must be positive");
    if (gcd(m, mi) != 1) throw InputError("solve_congruence: moduli must be pairwise coprime");
    m *= mi;
  }
  std::vector<BigInt> b;
  for (const auto& mi : moduli) {
    BigInt x = *inverse_mod(m / mi, mi);
    // A modulus of 1 has no valid orbit invariant; 1 keeps the sum intact.
    if (mi == 1) x = 1;
    b.push_back(x);
  }
  return b;
}

std::map<BigInt, std::vector<BigInt>> solve_b(const Schedule& s) {
  std::vector<BigInt> last;
  for (const auto& [p, row] : s.rows) {
    if (row.back().m > 1) last.push_back(row.back().m);
  }
  const auto last_b = solve_congruence(last);
  std::map<BigInt, std::vector<BigInt>> b;
  std::size_t next = 0;
  for (const auto& [p, row] : s.rows) {
    std::vector<BigInt> bs(row.size(), BigInt(1));
    if (row.back().m > 1) bs.back() = last_b[next++];
    b.emplace(p, std::move(bs));
  }
  return b;
}

std::vector<BigInt> solve_twist(const Schedule& s, const std::map<BigInt, std::vector<BigInt>>& b,
                                WuInvariant target) {
  const std::size_t len = s.k + 1;
  BigInt m = 1;
  Rational last_sum = 0;
  for (const auto& [p, row] : s.rows) {
    if (row.back().m == 1) continue;
    m = lcm(m, row.back().m);
    last_sum += Rational(b.at(p).back(), row.back().m);
  }
  const Rational hk = Rational(1, m) - last_sum;
  if (mp::denominator(hk) != 1) throw std::logic_error("solve_twist: h_k not integral");

  std::vector<BigInt> h(len, BigInt(0));
  h.back() = mp::numerator(hk);
  if (target == WuInvariant::finite(1)) return h;
  if (target.is_infinite() && s.k == 0) {
    throw InputError("solve_twist: target inf needs an even-free chart before the last");
  }
  for (std::size_t j = 0; j + 1 < len; ++j) {
    // w_j = 1 + sum of b over divisors in chart j + h_j.
    BigInt w = 1;
    for (const auto& [p, row] : s.rows) {
      if (row[j].m > 1) w += b.at(p)[j];
    }
    const int want = (target.is_infinite() && j == 0) ? 1 : 0;
    if (floor_mod(w, 2) != want) h[j] = -1;
  }
  return h;
}

SeifertSpec build(const ConstructionInput& input) {
  const Schedule s = schedule(input);
  const auto b = solve_b(s);
  SeifertSpec spec;
  spec.base.charts = s.k + 1;
  for (std::size_t j = 0; j <= s.k; ++j) {
    for (const auto& [p, row] : s.rows) {
      if (row[j].m == 1) continue;
      spec.divisors.push_back(Divisor{j, row[j].surface, row[j].m, b.at(p)[j], std::nullopt});
    }
  }
  spec.twist = solve_twist(s, b, input.target);
  require_valid(spec);
  return spec;
}

RoundTrip verify_roundtrip(const ConstructionInput& input) {
  RoundTrip rt{build(input), {}};
  rt.report = full_report(rt.spec);
  const auto& r = rt.report;
  if (!r.h1.is_trivial()) {
    throw RoundTripFailure("round trip: H_1 is not trivial (order " +
                           (r.h1.known ? to_string(r.h1.order) : std::string("unknown")) + ")");
  }
  if (!r.simply_connected || !*r.simply_connected) {
    throw RoundTripFailure("round trip: no simple connectivity certificate");
  }
  const FgAbelianGroup expected(input.k, input.counts);
  if (!is_isomorphic(*r.h2, expected)) {
    throw RoundTripFailure("round trip: H_2 is " + to_string(*r.h2) + ", expected " +
                           to_string(expected));
  }
  WuValue want = WuValue::kZero;
  if (input.target.is_infinite()) {
    want = WuValue::kInfinity;
  } else if (input.target.value() == 1) {
    want = WuValue::kOne;
  }
  if (*r.wu != want) {
    throw RoundTripFailure("round trip: Wu invariant is " + to_string(*r.wu) + ", expected " +
                           to_string(input.target));
  }
  return rt;
}

}  // namespace circle5
