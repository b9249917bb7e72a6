#include "circle5/sasakian.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

#include "circle5/error.hpp"

namespace circle5 {

namespace {

// Integer roots t of q(t) = v.
std::vector<BigInt> preimages(const Quadratic& q, const BigInt& v) {
  const BigInt d = 4 * q.a * (v - q.c) + q.b * q.b;
  if (d < 0 || !is_square(d)) return {};
  const BigInt s = isqrt(d);
  std::vector<BigInt> out;
  for (const BigInt& u : {BigInt(-q.b - s), BigInt(-q.b + s)}) {
    if (u % (2 * q.a) == 0) out.push_back(u / (2 * q.a));
  }
  if (out.size() == 2 && out[0] == out[1]) out.pop_back();
  return out;
}

std::vector<BigInt> distinct_sorted(const std::vector<BigInt>& values,
                                    std::vector<BigInt>* duplicates = nullptr) {
  std::vector<BigInt> v = values;
  std::sort(v.begin(), v.end());
  std::vector<BigInt> out;
  for (const auto& x : v) {
    if (!out.empty() && out.back() == x) {
      if (duplicates) duplicates->push_back(x);
      continue;
    }
    out.push_back(x);
  }
  return out;
}

std::vector<BigInt> positive_divisors(const BigInt& n) {
  std::vector<BigInt> divs{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = divs.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::size_t divisor_count(const BigInt& n) {
  std::size_t count = 1;
  for (const auto& [p, e] : factorize(n)) count *= e + 1;
  return count;
}

struct Ranked {
  CoverWitness w;

  auto key() const {
    return std::make_tuple(w.exceptions.size(), w.q.a, BigInt(abs(w.q.discriminant())), BigInt(abs(w.q.b)), w.q.c);
  }
};

// Normal form of q on `values`: c = smallest covered value, b <= 0.
std::optional<Ranked> normalize(const Quadratic& q, const std::vector<BigInt>& values,
                                std::size_t max_exceptions) {
  Ranked r;
  std::optional<BigInt> first;
  for (const auto& v : values) {
    if (q.covers(v)) {
      if (!first) first = v;
    } else {
      r.w.exceptions.push_back(v);
      if (r.w.exceptions.size() > max_exceptions) return std::nullopt;
    }
  }
  if (!first) return std::nullopt;
  const BigInt s = preimages(q, *first).front();
  r.w.q = Quadratic{q.a, BigInt(-abs(BigInt(2 * q.a * s + q.b))), *first};
  return r;
}

void offer(std::optional<Ranked>& best, std::optional<Ranked> cand) {
  if (cand && (!best || cand->key() < best->key())) best = std::move(cand);
}

// a = 1 quadratics through the pair (lo, hi), c = lo.
void offer_pair(std::optional<Ranked>& best, const BigInt& lo, const BigInt& hi,
                const std::vector<BigInt>& values, std::size_t max_exceptions) {
  const BigInt delta = hi - lo;
  for (const auto& t : positive_divisors(delta)) {
    offer(best, normalize(Quadratic{1, delta / t - t, lo}, values, max_exceptions));
  }
}

}  // namespace

bool Quadratic::covers(const BigInt& v) const { return !preimages(*this, v).empty(); }

Json to_json(const Quadratic& q) {
  Json j;
  j["a"] = bigint_to_json(q.a);
  j["b"] = bigint_to_json(q.b);
  j["c"] = bigint_to_json(q.c);
  return j;
}

std::string to_string(const Quadratic& q) {
  std::string out = (q.a == 1 ? std::string() : to_string(q.a)) + "t^2";
  const BigInt b = abs(q.b);
  const BigInt c = abs(q.c);
  if (b != 0) out += (q.b < 0 ? " - " : " + ") + (b == 1 ? std::string() : to_string(b)) + "t";
  if (c != 0) out += (q.c < 0 ? " - " : " + ") + to_string(c);
  return out;
}

std::optional<DensityViolation> interval_density_check(const std::vector<BigInt>& values) {
  const auto v = distinct_sorted(values);
  std::optional<DensityViolation> best;
  double best_excess = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 12; j < v.size(); ++j) {
      const std::size_t count = j - i + 1;
      const BigInt n = v[j] - v[i];
      const BigInt over = BigInt(count - 12);
      if (over * over <= 4 * n) continue;
      const double bound = 12.0 + 2.0 * std::sqrt(n.convert_to<double>());
      const double excess = static_cast<double>(count) - bound;
      if (!best || excess > best_excess) {
        best = DensityViolation{v[i], v[j], count, bound};
        best_excess = excess;
      }
    }
  }
  return best;
}

std::size_t quadratic_interval_count(const Quadratic& q, const BigInt& lo, const BigInt& hi) {
  if (q.a < 1) throw InputError("quadratic_interval_count: a must be >= 1");
  if (lo > hi) throw InputError("quadratic_interval_count: empty interval");
  // q(t) <= hi iff (2at + b)^2 <= 4a(hi - c) + b^2.
  const BigInt reach = 4 * q.a * (hi - q.c) + q.b * q.b;
  if (reach < 0) return 0;
  const BigInt r = isqrt(reach);
  const BigInt two_a = 2 * q.a;
  auto floor_div = [](const BigInt& x, const BigInt& y) {
    BigInt d = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) --d;
    return d;
  };
  const BigInt t_lo = -floor_div(-(-r - q.b), two_a);
  const BigInt t_hi = floor_div(r - q.b, two_a);
  std::set<BigInt> hit;
  for (BigInt t = t_lo; t <= t_hi; ++t) {
    const BigInt v = q(t);
    if (v >= lo && v <= hi) hit.insert(v);
  }
  const std::size_t count = hit.size();
  if (count > 2) {
    const BigInt over = BigInt(count - 2);
    if (q.a * over * over > 4 * (hi - lo)) {
      throw std::logic_error("quadratic_interval_count: count exceeds 2 + 2 sqrt(N/a)");
    }
  }
  return count;
}

CoverSearch quadratic_cover_search(const std::vector<BigInt>& values, std::size_t max_exceptions,
                                   std::size_t max_candidates) {
  const auto v = distinct_sorted(values);
  CoverSearch out;
  std::optional<Ranked> best;

  if (v.empty()) {
    best = Ranked{CoverWitness{Quadratic{1, 0, 0}, {}}};
  } else if (v.size() == 1) {
    // Any b works; pick the one with the vertex value nearest zero.
    const BigInt root = isqrt(4 * v[0]);
    for (const BigInt& b : {root, BigInt(root + 1)}) {
      offer(best, Ranked{CoverWitness{Quadratic{1, -b, v[0]}, {}}});
    }
    out.window = v;
  } else if (v.size() == 2) {
    offer_pair(best, v[0], v[1], v, max_exceptions);
    out.window = v;
  } else {
    const std::size_t w = std::min(v.size(), max_exceptions + 3);
    out.window.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(w));
    std::size_t required = 0;
    for (std::size_t i = 0; i < w; ++i) {
      for (std::size_t j = i + 1; j < w; ++j) {
        const std::size_t dj = divisor_count(v[j] - v[i]);
        for (std::size_t l = j + 1; l < w; ++l) {
          required += 4 * dj * divisor_count(v[l] - v[i]);
          ++out.triples;
        }
      }
    }
    out.candidates = required;
    if (required > max_candidates) {
      out.status = CoverSearch::Status::kInconclusive;
      return out;
    }
    for (std::size_t i = 0; i < w; ++i) {
      for (std::size_t j = i + 1; j < w; ++j) {
        const BigInt d2 = v[j] - v[i];
        const auto div2 = positive_divisors(d2);
        for (std::size_t l = j + 1; l < w; ++l) {
          const BigInt d3 = v[l] - v[i];
          const auto div3 = positive_divisors(d3);
          for (const auto& p2 : div2) {
            for (const BigInt& t2 : {p2, BigInt(-p2)}) {
              const BigInt s2 = d2 / t2;  // a t2 + b
              for (const auto& p3 : div3) {
                for (const BigInt& t3 : {p3, BigInt(-p3)}) {
                  if (t2 == t3) continue;
                  const BigInt num = s2 - d3 / t3;
                  const BigInt den = t2 - t3;
                  if (num % den != 0) continue;
                  const BigInt a = num / den;
                  if (a < 1) continue;
                  offer(best, normalize(Quadratic{a, s2 - a * t2, v[i]}, v, max_exceptions));
                }
              }
            }
          }
        }
      }
    }
    if (!best && v.size() <= max_exceptions + 2) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) offer_pair(best, v[i], v[j], v, max_exceptions);
      }
    }
  }
  if (best) {
    out.status = CoverSearch::Status::kFound;
    out.witness = std::move(best->w);
  }
  return out;
}

BigInt adjunction_genus(const BigInt& d) {
  if (d < 1) throw InputError("adjunction_genus: degree must be >= 1");
  return (d - 1) * (d - 2) / 2;
}

std::string to_string(SasakiReport::Status s) {
  switch (s) {
    case SasakiReport::Status::kFeasible:
      return "feasible";
    case SasakiReport::Status::kInfeasible:
      return "infeasible";
    case SasakiReport::Status::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

SasakiReport sasaki_check(const std::vector<BigInt>& values, const SasakiOptions& options) {
  for (const auto& x : values) {
    if (x < 1) throw InputError("sasaki_check: values must be positive, got " + to_string(x));
  }
  SasakiReport r;
  r.max_exceptions = options.max_exceptions;
  const auto distinct = distinct_sorted(values, &r.duplicates_dropped);
  r.densest_violation = interval_density_check(distinct);
  if (r.densest_violation) {
    r.status = SasakiReport::Status::kInfeasible;
    return r;
  }
  CoverSearch s = quadratic_cover_search(distinct, options.max_exceptions, options.max_candidates);
  switch (s.status) {
    case CoverSearch::Status::kFound:
      r.status = SasakiReport::Status::kFeasible;
      r.witness = s.witness;
      break;
    case CoverSearch::Status::kNone:
      r.status = SasakiReport::Status::kInfeasible;
      break;
    case CoverSearch::Status::kInconclusive:
      r.status = SasakiReport::Status::kInconclusive;
      break;
  }
  r.search = std::move(s);
  return r;
}

Json to_json(const SasakiReport& r) {
  Json j;
  j["status"] = to_string(r.status);
  j["conclusion"] = r.status == SasakiReport::Status::kFeasible     ? "no obstruction found"
                    : r.status == SasakiReport::Status::kInfeasible ? "obstructed"
                                                                    : "search budget exceeded";
  j["max_exceptions"] = r.max_exceptions;
  if (r.witness) {
    Json w;
    w["quadratic"] = to_json(r.witness->q);
    Json ex = Json::array();
    for (const auto& x : r.witness->exceptions) ex.push_back(bigint_to_json(x));
    w["exceptions"] = std::move(ex);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  if (r.densest_violation) {
    const auto& d = *r.densest_violation;
    Json v;
    v["interval"] = Json::array({bigint_to_json(d.lo), bigint_to_json(d.hi)});
    v["count"] = d.count;
    v["bound"] = d.bound;
    j["densest_violation"] = std::move(v);
  } else {
    j["densest_violation"] = nullptr;
  }
  if (r.search) {
    Json s;
    Json window = Json::array();
    for (const auto& x : r.search->window) window.push_back(bigint_to_json(x));
    s["window"] = std::move(window);
    s["triples"] = r.search->triples;
    s["candidates"] = r.search->candidates;
    j["search"] = std::move(s);
  } else {
    j["search"] = nullptr;
  }
  Json dup = Json::array();
  for (const auto& x : r.duplicates_dropped) dup.push_back(bigint_to_json(x));
  j["duplicates_dropped"] = std::move(dup);
  return j;
}

Threshold exact_search_threshold(const std::function<std::vector<BigInt>(std::size_t)>& family,
                                 std::size_t k_max, const SasakiOptions& options) {
  Threshold t;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const auto r = sasaki_check(family(k), options);
    if (r.status == SasakiReport::Status::kInconclusive && !t.first_inconclusive) t.first_inconclusive = k;
    if (r.status == SasakiReport::Status::kInfeasible) {
      t.first_infeasible = k;
      break;
    }
  }
  return t;
}

}  // namespace circle5
