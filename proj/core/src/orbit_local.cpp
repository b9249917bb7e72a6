#include "circle5/orbit_local.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "circle5/error.hpp"

namespace circle5 {

StabilizerRep::StabilizerRep(BigInt m, std::vector<BigInt> exponents)
    : m_(std::move(m)), exponents_(std::move(exponents)) {
  if (m_ < 1) throw InputError("stabilizer order must be at least 1");
  BigInt g = m_;
  for (const auto& j : exponents_) {
    if (j < 1 || j >= m_) {
      throw InputError("exponent " + to_string(j) + " outside [1, " + to_string(m_) + ")");
    }
    g = gcd(g, j);
  }
  if (g != 1) throw InputError("representation is not faithful: gcd(j, m) = " + to_string(g));
}

StabilizerRep StabilizerRep::canonical() const {
  std::vector<BigInt> js;
  js.reserve(exponents_.size());
  for (const auto& j : exponents_) js.push_back(std::min(j, BigInt(m_ - j)));
  std::sort(js.begin(), js.end());
  return StabilizerRep(m_, std::move(js));
}

namespace {

// Machine-integer path; C divides m, so nothing overflows.
LocalInvariants local_invariants_small(std::int64_t m, const std::vector<BigInt>& exponents) {
  const std::size_t r = exponents.size();
  std::vector<std::int64_t> js(r), prefix(r + 1), suffix(r + 1);
  for (std::size_t i = 0; i < r; ++i) js[i] = exponents[i].convert_to<std::int64_t>();
  prefix[0] = m;
  for (std::size_t i = 0; i < r; ++i) prefix[i + 1] = std::gcd(prefix[i], js[i]);
  suffix[r] = m;
  for (std::size_t i = r; i-- > 0;) suffix[i] = std::gcd(suffix[i + 1], js[i]);

  LocalInvariants inv;
  std::int64_t C = 1;
  inv.c.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    const std::int64_t c = std::gcd(prefix[i], suffix[i + 1]);
    inv.c.emplace_back(c);
    C *= c;
  }
  inv.C = C;
  inv.d.reserve(r);
  for (std::size_t i = 0; i < r; ++i) inv.d.emplace_back(js[i] / (C / inv.c[i].convert_to<std::int64_t>()));
  inv.manifold_point = C == m;
  return inv;
}

}  // namespace

LocalInvariants local_invariants(const StabilizerRep& rep) {
  const auto& js = rep.exponents();
  const std::size_t r = js.size();
  const BigInt& m = rep.order();
  if (m <= std::numeric_limits<std::int32_t>::max()) return local_invariants_small(m.convert_to<std::int64_t>(), js);

  // prefix[i] = gcd(m, j_0..j_{i-1}), suffix[i] = gcd(m, j_i..j_{r-1})
  std::vector<BigInt> prefix(r + 1), suffix(r + 1);
  prefix[0] = m;
  for (std::size_t i = 0; i < r; ++i) prefix[i + 1] = gcd(prefix[i], js[i]);
  suffix[r] = m;
  for (std::size_t i = r; i-- > 0;) suffix[i] = gcd(suffix[i + 1], js[i]);

  LocalInvariants inv;
  inv.C = 1;
  inv.c.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    inv.c.push_back(gcd(prefix[i], suffix[i + 1]));
    inv.C *= inv.c.back();
  }
  inv.d.reserve(r);
  for (std::size_t i = 0; i < r; ++i) inv.d.push_back(js[i] * inv.c[i] / inv.C);
  inv.manifold_point = inv.C == m;
  return inv;
}

OrbitInvariant::OrbitInvariant(BigInt m_in, BigInt b_in) : m(std::move(m_in)), b(std::move(b_in)) {
  if (m < 2) throw InputError("orbit invariant needs multiplicity m >= 2");
  if (b < 1 || b >= m) throw InputError("orbit invariant b outside [1, m)");
  if (gcd(b, m) != 1) {
    throw InputError("orbit invariant: gcd(b, m) = " + to_string(gcd(b, m)) + " != 1");
  }
}

OrbitInvariant orbit_invariant_from_rep(const BigInt& m, const BigInt& j) {
  if (m < 2) throw InputError("orbit invariant needs multiplicity m >= 2");
  const auto inv = inverse_mod(j, m);
  if (!inv) throw InputError("exponent " + to_string(j) + " is not a unit mod " + to_string(m));
  return OrbitInvariant(m, *inv);
}

StabilizerRep reconstruct_rep(std::span<const OrbitInvariant> invariants) {
  BigInt m = 1;
  for (std::size_t i = 0; i < invariants.size(); ++i) {
    for (std::size_t k = i + 1; k < invariants.size(); ++k) {
      if (gcd(invariants[i].m, invariants[k].m) != 1) {
        throw InputError("multiplicities " + to_string(invariants[i].m) + " and " +
                         to_string(invariants[k].m) + " are not coprime");
      }
    }
    m *= invariants[i].m;
  }
  std::vector<BigInt> js;
  js.reserve(invariants.size());
  for (const auto& inv : invariants) {
    // j = j0 mod c and j = 0 mod m/c, by CRT.
    const BigInt& c = inv.m;
    const BigInt rest = m / c;
    const BigInt j0 = *inverse_mod(inv.b, c);
    const BigInt lift = *inverse_mod(rest, c);
    js.push_back(floor_mod(j0 * lift % c * rest, m));
  }
  return StabilizerRep(m, std::move(js));
}

Json to_json(const LocalInvariants& inv) {
  Json out;
  Json c = Json::array(), d = Json::array();
  for (const auto& x : inv.c) c.push_back(bigint_to_json(x));
  for (const auto& x : inv.d) d.push_back(bigint_to_json(x));
  out["c"] = std::move(c);
  out["d"] = std::move(d);
  out["C"] = bigint_to_json(inv.C);
  out["manifold_point"] = inv.manifold_point;
  return out;
}

}  // namespace circle5
