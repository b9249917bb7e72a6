#include "circle5/classify.hpp"

#include <algorithm>

#include "circle5/error.hpp"

namespace circle5 {

unsigned WuInvariant::value() const {
  if (infinite_) throw InputError("Wu invariant is infinite");
  return value_;
}

std::string to_string(WuInvariant i) {
  return i.is_infinite() ? "inf" : std::to_string(i.value());
}

Json to_json(WuInvariant i) {
  if (i.is_infinite()) return Json("inf");
  return Json(i.value());
}

WuInvariant wu_from_json(const Json& j) {
  if (j.is_string()) return parse_wu(j.get<std::string>());
  const std::size_t n = index_from_json(j, "i");
  if (n > 4096) throw InputError("i: value out of range");
  return WuInvariant::finite(static_cast<unsigned>(n));
}

WuInvariant parse_wu(const std::string& text) {
  if (text == "inf" || text == "infinity") return WuInvariant::infinity();
  const BigInt n = parse_bigint(text);
  if (n < 0 || n > 4096) throw InputError("i: expected a natural number or 'inf'");
  return WuInvariant::finite(static_cast<unsigned>(n));
}

Json to_json(const FiveManifoldClass& c) {
  Json out = to_json(c.h2);
  out["i"] = to_json(c.i);
  return out;
}

FiveManifoldClass class_from_json(const Json& j) {
  require_known_fields(j, "class", {"free_rank", "torsion", "i"});
  Json group = j;
  group.erase("i");
  return {group_from_json(group), wu_from_json(require_field(j, "class", "i"))};
}

std::string to_string(GateRule rule) {
  switch (rule) {
    case GateRule::kPrimeCount:
      return "R1_PRIME_COUNT";
    case GateRule::kWuRange:
      return "R2_WU_RANGE";
    case GateRule::kSpinTwoCount:
      return "R3_SPIN_TWO_COUNT";
    case GateRule::kNotRealizable:
      return "NOT_REALIZABLE";
    case GateRule::kInvalidI:
      return "INVALID_I";
  }
  return "UNKNOWN";
}

Json to_json(const GateVerdict& v) {
  Json out;
  out["admissible"] = v.admissible;
  Json rules = Json::array();
  for (auto r : v.violated_rules) rules.push_back(to_string(r));
  out["violated_rules"] = std::move(rules);
  return out;
}

bool validate_i(const FgAbelianGroup& h2, WuInvariant i) {
  if (i.is_infinite()) return h2.free_rank() >= 1;
  if (i.value() == 0) return true;
  return h2.count(2, i.value()) != 0;
}

bool smale_barden_realizable(const FiveManifoldClass& c) {
  if (!validate_i(c.h2, c.i)) return false;
  bool all_even = true;
  bool only_c2_odd = true;  // c(2) odd, every other count even
  bool c2_odd = false;
  for (const auto& [pp, count] : c.h2.torsion()) {
    const bool odd = count % 2 != 0;
    const bool is_z2 = pp.prime() == 2 && pp.exponent() == 1;
    if (odd) all_even = false;
    if (is_z2) {
      c2_odd = odd;
    } else if (odd) {
      only_c2_odd = false;
    }
  }
  if (all_even) return true;
  return c2_odd && only_c2_odd && c.i == WuInvariant::finite(1);
}

GateVerdict circle_action_admissible(const FiveManifoldClass& c) {
  GateVerdict v;
  if (!validate_i(c.h2, c.i)) {
    v.violated_rules.push_back(GateRule::kInvalidI);
  } else if (!smale_barden_realizable(c)) {
    v.violated_rules.push_back(GateRule::kNotRealizable);
  }
  const std::size_t k = c.h2.free_rank();
  for (const auto& p : c.h2.primes()) {
    if (c.h2.exponents_of(p).size() > k + 1) {
      v.violated_rules.push_back(GateRule::kPrimeCount);
      break;
    }
  }
  const bool in_range = c.i.is_infinite() || c.i.value() <= 1;
  if (!in_range) v.violated_rules.push_back(GateRule::kWuRange);
  if (c.i.is_infinite() && c.h2.exponents_of(2).size() > k) {
    v.violated_rules.push_back(GateRule::kSpinTwoCount);
  }
  std::sort(v.violated_rules.begin(), v.violated_rules.end());
  v.admissible = v.violated_rules.empty();
  return v;
}

}  // namespace circle5
