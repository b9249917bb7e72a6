#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "circle5/json_io.hpp"
#include "circle5/numtheory.hpp"

namespace circle5 {

/// Dense integer matrix, row-major, arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  /// Throws InputError unless entries.size() == rows * cols.
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  const std::vector<BigInt>& entries() const { return entries_; }

  /// Fraction-free (Bareiss) determinant of a square matrix.
  BigInt determinant() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

/// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ... >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// The min(rows, cols) diagonal entries of D.
  std::vector<BigInt> diagonal() const;
};

/// Smith normal form by repeated pivoting on the entry of smallest nonzero
/// absolute value (row-major scan order), so U and V are reproducible.
/// Requires a nonempty matrix.
SmithForm smith_normal_form(const IntMatrix& a);

/// A prime power p^e with e >= 1; the constructor checks primality.
class PrimePower {
 public:
  PrimePower(BigInt p, unsigned e);

  const BigInt& prime() const { return p_; }
  unsigned exponent() const { return e_; }
  BigInt value() const;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
  friend std::strong_ordering operator<=>(const PrimePower& x, const PrimePower& y);

 private:
  BigInt p_;
  unsigned e_;
};

/// Primary torsion data: multiplicity c(p^e) of each summand Z/p^e.
/// Ordered by (p, e); zero counts are never stored.
using TorsionCounts = std::map<PrimePower, BigInt>;

/// Splits a direct sum of cyclic groups Z/f into prime-power summands.
/// Throws InputError for a factor below 2.
TorsionCounts primary_decomposition(std::span<const BigInt> invariant_factors);

/// Finitely generated abelian group Z^k + sum (Z/p^e)^c(p^e).
class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;
  /// Drops zero counts; throws InputError on negative counts.
  FgAbelianGroup(std::size_t free_rank, TorsionCounts torsion);

  static FgAbelianGroup from_invariant_factors(std::size_t free_rank,
                                               std::span<const BigInt> factors);

  std::size_t free_rank() const { return free_rank_; }
  const TorsionCounts& torsion() const { return torsion_; }

  /// c(p^e), zero when absent.
  BigInt count(const BigInt& p, unsigned e) const;
  /// Exponents e with c(p^e) > 0, increasing.
  std::vector<unsigned> exponents_of(const BigInt& p) const;
  /// Distinct primes occurring in the torsion, increasing.
  std::vector<BigInt> primes() const;

  BigInt torsion_order() const;
  /// Invariant factors d1 | d2 | ... (all >= 2) of the torsion subgroup.
  std::vector<BigInt> invariant_factors() const;

  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }

  friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  TorsionCounts torsion_;
};

bool is_isomorphic(const FgAbelianGroup& g, const FgAbelianGroup& h);

/// Cokernel of A: Z^cols -> Z^rows.
FgAbelianGroup group_from_cokernel(const IntMatrix& a);

/// Direct sum.
FgAbelianGroup operator+(const FgAbelianGroup& g, const FgAbelianGroup& h);

/// `{"free_rank": k, "torsion": [{"p":..,"e":..,"count":..}]}`, sorted by (p, e).
Json to_json(const FgAbelianGroup& g);
FgAbelianGroup group_from_json(const Json& j);

/// Compact human-readable form, e.g. "Z^1 + (Z/2)^2 + Z/3".
std::string to_string(const FgAbelianGroup& g);

}  // namespace circle5
