#include "circle5/cohomology.hpp"

#include <algorithm>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "circle5/error.hpp"

namespace circle5 {

namespace mp = boost::multiprecision;

RestrictionMap restriction_matrix(const SeifertSpec& spec) {
  require_valid(spec);
  const std::size_t rank = spec.base.rank();
  RestrictionMap map;
  for (const auto& d : spec.divisors) {
    // The intersection form is the identity, so H_l . D is the l-th
    // coordinate of [D].
    std::vector<BigInt> row;
    for (const auto& x : d.homology_class(rank)) row.push_back(floor_mod(x, d.m));
    map.rows.push_back(std::move(row));
    map.moduli.push_back(d.m);
  }
  return map;
}

namespace {

std::size_t rank_mod_p(std::vector<std::vector<BigInt>> rows, const BigInt& p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (auto& row : rows) {
    for (auto& x : row) x = floor_mod(x, p);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const BigInt inv = *inverse_mod(rows[rank][c], p);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const BigInt f = rows[r][c] * inv % p;
      for (std::size_t k = c; k < cols; ++k) {
        rows[r][k] = floor_mod(rows[r][k] - f * rows[rank][k], p);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool is_surjective(const RestrictionMap& map) {
  std::set<BigInt> primes;
  for (const auto& m : map.moduli) {
    for (const auto& [p, e] : factorize(m)) primes.insert(p);
  }
  for (const auto& p : primes) {
    std::vector<std::vector<BigInt>> rows;
    for (std::size_t i = 0; i < map.rows.size(); ++i) {
      if (map.moduli[i] % p == 0) rows.push_back(map.rows[i]);
    }
    if (rank_mod_p(rows, p) != rows.size()) return false;
  }
  return true;
}

FgAbelianGroup restriction_cokernel(const RestrictionMap& map) {
  const std::size_t s = map.rows.size();
  if (s == 0) return {};
  const std::size_t rank = map.rows.front().size();
  // Relations: images of the basis H_l, then m_i e_i.
  IntMatrix rel(s, rank + s);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t l = 0; l < rank; ++l) rel(i, l) = map.rows[i][l];
    rel(i, rank + i) = map.moduli[i];
  }
  return group_from_cokernel(rel);
}

H1Order h1_order(const SeifertSpec& spec) {
  const RestrictionMap map = restriction_matrix(spec);
  H1Order out;
  if (!is_surjective(map)) {
    out.known = false;
    out.lower_bound = restriction_cokernel(map);
    return out;
  }
  BigInt d = 0;
  for (const auto& x : chern_mu(spec)) d = gcd(d, x);
  out.order = d;
  return out;
}

namespace {

FgAbelianGroup divisor_torsion(const SeifertSpec& spec) {
  TorsionCounts counts;
  for (const auto& d : spec.divisors) {
    const BigInt beta = d.first_betti();
    if (beta == 0) continue;
    for (const auto& [p, e] : factorize(d.m)) counts[PrimePower(p, e)] += beta;
  }
  return FgAbelianGroup(0, std::move(counts));
}

void require_h1_trivial(const SeifertSpec& spec, const char* what) {
  const H1Order h1 = h1_order(spec);
  if (!h1.is_trivial()) {
    throw InputError(std::string(what) + " requires H_1(L) = 0, but |H_1| = " +
                     (h1.known ? to_string(h1.order) : std::string("unknown nonzero")));
  }
}

}  // namespace

FgAbelianGroup h2_group(const SeifertSpec& spec) {
  require_h1_trivial(spec, "h2_group");
  return FgAbelianGroup(spec.base.rank() - 1, {}) + divisor_torsion(spec);
}

FgAbelianGroup h3_torsion(const SeifertSpec& spec) {
  require_h1_trivial(spec, "h3_torsion");
  return divisor_torsion(spec);
}

Gf2Vector w2_class(const SeifertSpec& spec) {
  require_valid(spec);
  const std::size_t rank = spec.base.rank();
  std::vector<BigInt> w(rank, BigInt(1));
  for (std::size_t l = 0; l < rank; ++l) w[l] += spec.twist[l];
  for (const auto& d : spec.divisors) {
    if (!d.orientable()) {
      throw InputError("w2_class needs orientable divisors; use wu_invariant instead");
    }
    const auto cls = d.homology_class(rank);
    for (std::size_t l = 0; l < rank; ++l) w[l] += d.b * cls[l];
  }
  Gf2Vector out(rank);
  for (std::size_t l = 0; l < rank; ++l) out[l] = static_cast<std::uint8_t>(floor_mod(w[l], 2));
  return out;
}

std::string to_string(WuValue v) {
  switch (v) {
    case WuValue::kZero:
      return "0";
    case WuValue::kOne:
      return "1";
    case WuValue::kInfinity:
      return "inf";
    case WuValue::kIndeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

namespace {

Gf2Vector mod2(const std::vector<BigInt>& v) {
  Gf2Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<std::uint8_t>(floor_mod(v[i], 2));
  return out;
}

std::vector<Gf2Vector> kernel_generators(const SeifertSpec& spec) {
  const std::size_t rank = spec.base.rank();
  // f^* c1(L/mu) = 0 integrally; f^*[D] = m [E] vanishes mod 2 for even m.
  std::vector<Gf2Vector> gens{mod2(chern_mu(spec))};
  for (const auto& d : spec.divisors) {
    if (d.m % 2 == 0) gens.push_back(mod2(d.homology_class(rank)));
  }
  return gens;
}

bool all_generator_classes(const SeifertSpec& spec) {
  return std::all_of(spec.divisors.begin(), spec.divisors.end(),
                     [](const Divisor& d) { return d.has_generator_class(); });
}

std::size_t even_divisors_over(const SeifertSpec& spec, const std::vector<bool>& charts) {
  std::size_t count = 0;
  for (const auto& d : spec.divisors) {
    if (charts[d.chart] && d.m % 2 == 0) ++count;
  }
  return count;
}

// c1 of the bundle restricted over the sub-connected-sum Y (charts selected),
// scaled by m(Y), mod 2, as a vector on the full base.
Gf2Vector sub_chern_mu_mod2(const SeifertSpec& spec, const std::vector<bool>& charts) {
  const auto c1 = chern_class(spec);
  BigInt m = 1;
  for (const auto& d : spec.divisors) {
    if (charts[d.chart]) m = lcm(m, d.m);
  }
  Gf2Vector out(c1.size(), 0);
  for (std::size_t l = 0; l < c1.size(); ++l) {
    if (!charts[l]) continue;
    const Rational scaled = c1[l] * Rational(m);
    if (mp::denominator(scaled) != 1) throw std::logic_error("sub-bundle Chern class not integral");
    out[l] = static_cast<std::uint8_t>(floor_mod(mp::numerator(scaled), 2));
  }
  return out;
}

std::optional<InfinityCertificate> try_certificate(const SeifertSpec& spec,
                                                   const std::vector<bool>& charts,
                                                   const Gf2Vector& w, const Gf2Span& k2) {
  if (even_divisors_over(spec, charts) > 1) return std::nullopt;
  const std::size_t rank = w.size();

  // Find kappa in K2 agreeing with w off the selected charts.
  Gf2Span projected(rank);
  for (const auto& g : k2.generators()) {
    Gf2Vector p = g;
    for (std::size_t l = 0; l < rank; ++l) {
      if (charts[l]) p[l] = 0;
    }
    projected.insert(p);
  }
  Gf2Vector w_out = w;
  for (std::size_t l = 0; l < rank; ++l) {
    if (charts[l]) w_out[l] = 0;
  }
  const auto combination = projected.express(w_out);
  if (!combination) return std::nullopt;
  Gf2Vector v = w;
  for (std::size_t i = 0; i < combination->size(); ++i) {
    if ((*combination)[i]) v = gf2_add(v, k2.generators()[i]);
  }

  const Gf2Vector c1y = sub_chern_mu_mod2(spec, charts);
  Gf2Span c1_span(rank);
  c1_span.insert(c1y);
  if (c1_span.contains(v)) return std::nullopt;
  // Every kernel element living on Y must already die in the bundle over Y.
  const Gf2Span k2_on_y = k2.restricted_to(charts);
  for (const auto& g : k2_on_y.generators()) {
    if (!c1_span.contains(g)) return std::nullopt;
  }
  return InfinityCertificate{charts, std::move(v), c1y};
}

}  // namespace

WuAnalysis analyze_wu(const SeifertSpec& spec) {
  require_h1_trivial(spec, "wu_invariant");
  WuAnalysis out;
  for (const auto& d : spec.divisors) {
    if (!d.orientable()) {
      out.value = WuValue::kOne;
      return out;
    }
  }
  const std::size_t rank = spec.base.rank();
  out.w2 = w2_class(spec);
  out.kernel_generators = kernel_generators(spec);
  Gf2Span k2(rank);
  for (const auto& g : out.kernel_generators) k2.insert(g);
  if (k2.contains(out.w2)) {
    out.value = WuValue::kZero;
    return out;
  }

  // Candidate sub-connected-sums: the whole base first, then (for standard
  // arrangements) the odd charts alone and the odd charts plus one even chart.
  std::vector<std::vector<bool>> candidates{std::vector<bool>(rank, true)};
  if (all_generator_classes(spec)) {
    std::vector<bool> odd(rank, true);
    std::vector<std::size_t> even_charts;
    for (const auto& d : spec.divisors) {
      if (d.m % 2 == 0) {
        odd[d.chart] = false;
        even_charts.push_back(d.chart);
      }
    }
    std::sort(even_charts.begin(), even_charts.end());
    even_charts.erase(std::unique(even_charts.begin(), even_charts.end()), even_charts.end());
    if (std::find(odd.begin(), odd.end(), true) != odd.end()) candidates.push_back(odd);
    for (std::size_t e : even_charts) {
      auto with_e = odd;
      with_e[e] = true;
      candidates.push_back(std::move(with_e));
    }
  }
  for (const auto& charts : candidates) {
    if (auto cert = try_certificate(spec, charts, out.w2, k2)) {
      out.value = WuValue::kInfinity;
      out.infinity = std::move(cert);
      return out;
    }
  }
  out.value = WuValue::kIndeterminate;
  return out;
}

WuValue wu_invariant(const SeifertSpec& spec) { return analyze_wu(spec).value; }

bool recheck_wu(const SeifertSpec& spec, const WuAnalysis& analysis) {
  const std::size_t rank = spec.base.rank();
  const bool has_nonorientable = std::any_of(spec.divisors.begin(), spec.divisors.end(),
                                             [](const Divisor& d) { return !d.orientable(); });
  switch (analysis.value) {
    case WuValue::kIndeterminate:
      return !has_nonorientable;
    case WuValue::kOne:
      return has_nonorientable;
    case WuValue::kZero:
    case WuValue::kInfinity:
      break;
  }
  if (has_nonorientable) return false;
  const Gf2Vector w = w2_class(spec);
  const auto gens = kernel_generators(spec);
  auto in_span = [](std::vector<Gf2Vector> base, const Gf2Vector& v) {
    const std::size_t r = gf2_rank(base);
    base.push_back(v);
    return gf2_rank(std::move(base)) == r;
  };
  if (analysis.value == WuValue::kZero) return in_span(gens, w);

  if (!analysis.infinity) return false;
  const auto& cert = *analysis.infinity;
  if (cert.charts.size() != rank || cert.representative.size() != rank) return false;
  if (even_divisors_over(spec, cert.charts) > 1) return false;
  if (!all_generator_classes(spec) &&
      std::find(cert.charts.begin(), cert.charts.end(), false) != cert.charts.end()) {
    return false;
  }
  if (w == cert.representative) {
    if (in_span(gens, w)) return false;
  } else if (!in_span(gens, gf2_add(w, cert.representative))) {
    return false;
  }
  for (std::size_t l = 0; l < rank; ++l) {
    if (!cert.charts[l] && cert.representative[l]) return false;
  }
  const Gf2Vector c1y = sub_chern_mu_mod2(spec, cert.charts);
  if (gf2_is_zero(cert.representative) || cert.representative == c1y) return false;
  // dim(K2 on Y) = rank K2 - rank of K2 projected off Y; it must fit inside <c1y>.
  std::vector<Gf2Vector> off_y;
  for (auto g : gens) {
    for (std::size_t l = 0; l < rank; ++l) {
      if (cert.charts[l]) g[l] = 0;
    }
    off_y.push_back(std::move(g));
  }
  const std::size_t dim_on_y = gf2_rank(gens) - gf2_rank(off_y);
  if (dim_on_y == 0) return true;
  if (dim_on_y > 1 || gf2_is_zero(c1y)) return false;
  return in_span(gens, c1y);
}

bool simply_connected(const SeifertSpec& spec) {
  require_valid(spec);
  if (!all_generator_classes(spec)) {
    throw InputError("simply_connected: divisors with non-generator classes have no pi_1 certificate");
  }
  return h1_order(spec).is_trivial();
}

CohomologyReport full_report(const SeifertSpec& spec) {
  require_valid(spec);
  CohomologyReport r;
  const RestrictionMap map = restriction_matrix(spec);
  r.restriction_surjective = is_surjective(map);
  r.h1 = h1_order(spec);
  r.c1 = chern_class(spec);
  r.c1_mu = chern_mu(spec);
  r.orbifold_order = orbifold_order(spec);
  if (r.h1.is_trivial()) {
    r.h2 = h2_group(spec);
    r.h3_torsion = h3_torsion(spec);
    r.wu = wu_invariant(spec);
  }
  if (all_generator_classes(spec)) r.simply_connected = r.h1.is_trivial();
  return r;
}

Json to_json(const CohomologyReport& r) {
  Json out;
  if (r.h1.known) {
    out["h1_order"] = bigint_to_json(r.h1.order);
  } else {
    out["h1_order"] = "unknown_nonzero";
    out["h1_lower_bound"] = to_json(*r.h1.lower_bound);
  }
  out["restriction_surjective"] = r.restriction_surjective;
  out["h2"] = r.h2 ? to_json(*r.h2) : Json(nullptr);
  out["h3_torsion"] = r.h3_torsion ? to_json(*r.h3_torsion) : Json(nullptr);
  Json c1 = Json::array();
  for (const auto& x : r.c1) c1.push_back(to_string(x));
  out["c1"] = std::move(c1);
  Json c1_mu = Json::array();
  for (const auto& x : r.c1_mu) c1_mu.push_back(bigint_to_json(x));
  out["c1_mu"] = std::move(c1_mu);
  out["orbifold_order"] = bigint_to_json(r.orbifold_order);
  if (!r.wu) {
    out["wu"] = nullptr;
  } else if (*r.wu == WuValue::kZero || *r.wu == WuValue::kOne) {
    out["wu"] = *r.wu == WuValue::kZero ? 0 : 1;
  } else {
    out["wu"] = to_string(*r.wu);
  }
  out["simply_connected"] = r.simply_connected ? Json(*r.simply_connected) : Json(nullptr);
  return out;
}

}  // namespace circle5
