#include "circle5/numtheory.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include <boost/multiprecision/integer.hpp>

#include "circle5/error.hpp"

namespace circle5 {

namespace mp = boost::multiprecision;

BigInt gcd(const BigInt& a, const BigInt& b) {
  return mp::gcd(mp::abs(a), mp::abs(b));
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return mp::abs(a / gcd(a, b) * b);
}

BigInt floor_mod(const BigInt& a, const BigInt& m) {
  if (m == 0) throw InputError("floor_mod: zero modulus");
  const BigInt mm = mp::abs(m);
  BigInt r = a % mm;
  if (r < 0) r += mm;
  return r;
}

std::optional<BigInt> inverse_mod(const BigInt& a, const BigInt& m) {
  if (m < 1) throw InputError("inverse_mod: modulus must be positive");
  if (m == 1) return BigInt(0);
  BigInt old_r = floor_mod(a, m), r = m;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    const BigInt q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) return std::nullopt;
  return floor_mod(old_s, m);
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw InputError("isqrt: negative argument");
  return mp::sqrt(n);
}

bool is_square(const BigInt& n) {
  if (n < 0) return false;
  const BigInt s = mp::sqrt(n);
  return s * s == n;
}

namespace {

constexpr std::array<unsigned, 25> kPrimeBases = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41,
    43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

// 3317044064679887385961981: below it the first 13 prime bases suffice.
const BigInt& deterministic_limit() {
  static const BigInt limit("3317044064679887385961981");
  return limit;
}

bool strong_probable_prime(const BigInt& n, const BigInt& d, unsigned s,
                           unsigned base) {
  BigInt x = mp::powm(BigInt(base), d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n - 1) return true;
    if (x == 1) return false;
  }
  return false;
}

BigInt pollard_brent(const BigInt& n, unsigned seed) {
  if (n % 2 == 0) return 2;
  BigInt y = 2 + seed, c = 1 + seed, m = 64;
  BigInt g = 1, r = 1, q = 1, x, ys;
  auto f = [&](const BigInt& v) { return (v * v + c) % n; };
  do {
    x = y;
    for (BigInt i = 0; i < r; ++i) y = f(y);
    BigInt k = 0;
    do {
      ys = y;
      for (BigInt i = 0; i < m && i < r - k; ++i) {
        y = f(y);
        q = q * mp::abs(x - y) % n;
      }
      g = gcd(q, n);
      k += m;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1);
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd(mp::abs(x - ys), n);
    } while (g == 1);
  }
  return g;
}

void factor_into(const BigInt& n, std::vector<BigInt>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  for (unsigned seed = 1;; ++seed) {
    const BigInt d = pollard_brent(n, seed);
    if (d != n && d != 1) {
      factor_into(d, out);
      factor_into(n / d, out);
      return;
    }
  }
}

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  for (unsigned p : kPrimeBases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  BigInt d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  const std::size_t rounds = n < deterministic_limit() ? 13 : kPrimeBases.size();
  for (std::size_t i = 0; i < rounds; ++i) {
    if (!strong_probable_prime(n, d, s, kPrimeBases[i])) return false;
  }
  return true;
}

std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n) {
  if (n < 1) throw InputError("factorize: argument must be positive");
  std::vector<BigInt> primes;
  BigInt rest = n;
  for (unsigned p = 2; p < 10000 && BigInt(p) * p <= rest; p += (p == 2 ? 1 : 2)) {
    while (rest % p == 0) {
      primes.emplace_back(p);
      rest /= p;
    }
  }
  factor_into(rest, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<BigInt, unsigned>> result;
  for (const auto& p : primes) {
    if (!result.empty() && result.back().first == p) {
      ++result.back().second;
    } else {
      result.emplace_back(p, 1u);
    }
  }
  return result;
}

std::string to_string(const BigInt& n) { return n.str(); }

std::string to_string(const Rational& q) {
  if (mp::denominator(q) == 1) return mp::numerator(q).str();
  return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

BigInt parse_bigint(std::string_view text) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) {
    throw InputError("not an integer: '" + std::string(text) + "'");
  }
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw InputError("not an integer: '" + std::string(text) + "'");
    }
  }
  BigInt value(std::string(text.substr(pos)));
  return text[0] == '-' ? BigInt(-value) : value;
}

bool fits_int64(const BigInt& n) {
  return n >= std::numeric_limits<std::int64_t>::min() &&
         n <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace circle5
