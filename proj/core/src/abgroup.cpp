#include "circle5/abgroup.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "circle5/error.hpp"

namespace circle5 {

namespace mp = boost::multiprecision;

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw InputError("IntMatrix: entry count does not match dimensions");
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<BigInt> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    if (row.size() != cols) throw InputError("IntMatrix: ragged rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return IntMatrix(rows.size(), cols, std::move(entries));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("IntMatrix: dimension mismatch in product");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

BigInt IntMatrix::determinant() const {
  if (rows_ != cols_) throw InputError("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[target] += factor * row[source]
void add_row(IntMatrix& m, std::size_t target, std::size_t source, const BigInt& factor) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (m(source, j) != 0) m(target, j) += factor * m(source, j);
  }
}

void add_col(IntMatrix& m, std::size_t target, std::size_t source, const BigInt& factor) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, source) != 0) m(i, target) += factor * m(i, source);
  }
}

}  // namespace

std::vector<BigInt> SmithForm::diagonal() const {
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  if (a.empty()) throw InputError("smith_normal_form: empty matrix");
  const std::size_t rows = a.rows(), cols = a.cols();
  SmithForm f{IntMatrix::identity(rows), a, IntMatrix::identity(cols)};
  IntMatrix& d = f.D;

  for (std::size_t s = 0; s < std::min(rows, cols); ++s) {
    for (;;) {
      // Smallest nonzero |entry| in the trailing block, first in scan order.
      std::size_t pr = rows, pc = cols;
      BigInt best;
      for (std::size_t i = s; i < rows; ++i) {
        for (std::size_t j = s; j < cols; ++j) {
          if (d(i, j) == 0) continue;
          const BigInt mag = mp::abs(d(i, j));
          if (pr == rows || mag < best) {
            best = mag;
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) return f;  // trailing block is zero

      swap_rows(d, s, pr);
      swap_rows(f.U, s, pr);
      swap_cols(d, s, pc);
      swap_cols(f.V, s, pc);

      bool cleared = true;
      for (std::size_t i = s + 1; i < rows; ++i) {
        if (d(i, s) == 0) continue;
        const BigInt q = d(i, s) / d(s, s);
        add_row(d, i, s, -q);
        add_row(f.U, i, s, -q);
        if (d(i, s) != 0) cleared = false;
      }
      for (std::size_t j = s + 1; j < cols; ++j) {
        if (d(s, j) == 0) continue;
        const BigInt q = d(s, j) / d(s, s);
        add_col(d, j, s, -q);
        add_col(f.V, j, s, -q);
        if (d(s, j) != 0) cleared = false;
      }
      if (!cleared) continue;

      // Enforce divisibility of the trailing block by the pivot.
      std::size_t bad_row = rows;
      for (std::size_t i = s + 1; i < rows && bad_row == rows; ++i) {
        for (std::size_t j = s + 1; j < cols; ++j) {
          if (d(i, j) % d(s, s) != 0) {
            bad_row = i;
            break;
          }
        }
      }
      if (bad_row == rows) break;
      add_row(d, s, bad_row, 1);
      add_row(f.U, s, bad_row, 1);
    }
    if (d(s, s) < 0) {
      for (std::size_t j = 0; j < cols; ++j) d(s, j) = -d(s, j);
      for (std::size_t j = 0; j < rows; ++j) f.U(s, j) = -f.U(s, j);
    }
  }
  return f;
}

PrimePower::PrimePower(BigInt p, unsigned e) : p_(std::move(p)), e_(e) {
  if (e_ < 1) throw InputError("prime power exponent must be at least 1");
  if (!is_prime(p_)) throw InputError(to_string(p_) + " is not prime");
}

BigInt PrimePower::value() const { return mp::pow(p_, e_); }

std::strong_ordering operator<=>(const PrimePower& x, const PrimePower& y) {
  if (x.p_ != y.p_) return x.p_ < y.p_ ? std::strong_ordering::less : std::strong_ordering::greater;
  return x.e_ <=> y.e_;
}

TorsionCounts primary_decomposition(std::span<const BigInt> invariant_factors) {
  TorsionCounts out;
  for (const auto& f : invariant_factors) {
    if (f < 2) throw InputError("invariant factor " + to_string(f) + " is below 2");
    for (const auto& [p, e] : factorize(f)) out[PrimePower(p, e)] += 1;
  }
  return out;
}

FgAbelianGroup::FgAbelianGroup(std::size_t free_rank, TorsionCounts torsion)
    : free_rank_(free_rank) {
  for (auto& [pp, c] : torsion) {
    if (c < 0) throw InputError("negative torsion count");
    if (c > 0) torsion_.emplace(pp, std::move(c));
  }
}

FgAbelianGroup FgAbelianGroup::from_invariant_factors(std::size_t free_rank,
                                                      std::span<const BigInt> factors) {
  return FgAbelianGroup(free_rank, primary_decomposition(factors));
}

BigInt FgAbelianGroup::count(const BigInt& p, unsigned e) const {
  for (const auto& [pp, c] : torsion_) {
    if (pp.prime() == p && pp.exponent() == e) return c;
  }
  return 0;
}

std::vector<unsigned> FgAbelianGroup::exponents_of(const BigInt& p) const {
  std::vector<unsigned> out;
  for (const auto& [pp, c] : torsion_) {
    if (pp.prime() == p) out.push_back(pp.exponent());
  }
  return out;
}

std::vector<BigInt> FgAbelianGroup::primes() const {
  std::vector<BigInt> out;
  for (const auto& [pp, c] : torsion_) {
    if (out.empty() || out.back() != pp.prime()) out.push_back(pp.prime());
  }
  return out;
}

BigInt FgAbelianGroup::torsion_order() const {
  BigInt order = 1;
  for (const auto& [pp, c] : torsion_) {
    const BigInt q = pp.value();
    for (BigInt i = 0; i < c; ++i) order *= q;
  }
  return order;
}

std::vector<BigInt> FgAbelianGroup::invariant_factors() const {
  // For each prime, list the exponents with multiplicity, largest first; the
  // i-th invariant factor from the top multiplies the i-th entries together.
  std::map<BigInt, std::vector<unsigned>> by_prime;
  std::size_t width = 0;
  for (const auto& [pp, c] : torsion_) {
    auto& list = by_prime[pp.prime()];
    for (BigInt i = 0; i < c; ++i) list.push_back(pp.exponent());
  }
  for (auto& [p, list] : by_prime) {
    std::sort(list.rbegin(), list.rend());
    width = std::max(width, list.size());
  }
  std::vector<BigInt> factors(width, BigInt(1));
  for (const auto& [p, list] : by_prime) {
    for (std::size_t i = 0; i < list.size(); ++i) factors[i] *= mp::pow(p, list[i]);
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

bool is_isomorphic(const FgAbelianGroup& g, const FgAbelianGroup& h) {
  return g.free_rank() == h.free_rank() && g.torsion() == h.torsion();
}

FgAbelianGroup group_from_cokernel(const IntMatrix& a) {
  if (a.rows() == 0) return {};
  if (a.cols() == 0) return FgAbelianGroup(a.rows(), {});
  const auto diag = smith_normal_form(a).diagonal();
  std::size_t rank = 0;
  std::vector<BigInt> torsion;
  for (const auto& d : diag) {
    if (d != 0) ++rank;
    if (d >= 2) torsion.push_back(d);
  }
  return FgAbelianGroup::from_invariant_factors(a.rows() - rank, torsion);
}

FgAbelianGroup operator+(const FgAbelianGroup& g, const FgAbelianGroup& h) {
  TorsionCounts t = g.torsion();
  for (const auto& [pp, c] : h.torsion()) t[pp] += c;
  return FgAbelianGroup(g.free_rank() + h.free_rank(), std::move(t));
}

Json to_json(const FgAbelianGroup& g) {
  Json torsion = Json::array();
  for (const auto& [pp, c] : g.torsion()) {
    Json entry;
    entry["p"] = bigint_to_json(pp.prime());
    entry["e"] = pp.exponent();
    entry["count"] = bigint_to_json(c);
    torsion.push_back(std::move(entry));
  }
  Json out;
  out["free_rank"] = g.free_rank();
  out["torsion"] = std::move(torsion);
  return out;
}

FgAbelianGroup group_from_json(const Json& j) {
  require_known_fields(j, "group", {"free_rank", "torsion"});
  const std::size_t rank = index_from_json(require_field(j, "group", "free_rank"), "free_rank");
  TorsionCounts torsion;
  const Json& list = require_field(j, "group", "torsion");
  if (!list.is_array()) throw InputError("group: 'torsion' must be an array");
  for (const auto& entry : list) {
    require_known_fields(entry, "torsion entry", {"p", "e", "count"});
    const BigInt p = bigint_from_json(require_field(entry, "torsion entry", "p"), "p");
    const std::size_t e = index_from_json(require_field(entry, "torsion entry", "e"), "e");
    const BigInt c = bigint_from_json(require_field(entry, "torsion entry", "count"), "count");
    if (e < 1 || e > 4096) throw InputError("torsion entry: exponent out of range");
    if (c < 0) throw InputError("torsion entry: negative count");
    PrimePower pp(p, static_cast<unsigned>(e));
    if (torsion.count(pp)) {
      throw InputError("torsion entry: duplicate key p=" + to_string(p) +
                       " e=" + std::to_string(e));
    }
    torsion.emplace(std::move(pp), c);
  }
  return FgAbelianGroup(rank, std::move(torsion));
}

std::string to_string(const FgAbelianGroup& g) {
  std::ostringstream out;
  bool first = true;
  if (g.free_rank() > 0) {
    out << "Z^" << g.free_rank();
    first = false;
  }
  for (const auto& [pp, c] : g.torsion()) {
    if (!first) out << " + ";
    first = false;
    const std::string cyclic = pp.exponent() == 1
                                   ? "Z/" + to_string(pp.prime())
                                   : "Z/" + to_string(pp.prime()) + "^" + std::to_string(pp.exponent());
    if (c == 1) {
      out << cyclic;
    } else {
      out << "(" << cyclic << ")^" << c;
    }
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace circle5
