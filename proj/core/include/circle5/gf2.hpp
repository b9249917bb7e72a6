#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace circle5 {

/// Vector over Z/2, one entry (0 or 1) per coordinate.
using Gf2Vector = std::vector<std::uint8_t>;

Gf2Vector gf2_add(const Gf2Vector& x, const Gf2Vector& y);
bool gf2_is_zero(const Gf2Vector& x);

/// A subspace of (Z/2)^n kept in reduced row echelon form.
///
/// Every inserted generator is remembered so membership queries can return
/// the combination of original generators that produces a vector.
class Gf2Span {
 public:
  explicit Gf2Span(std::size_t dimension);

  std::size_t dimension() const { return dimension_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t generator_count() const { return generators_.size(); }
  const std::vector<Gf2Vector>& generators() const { return generators_; }

  /// Adds a generator; returns true when the span grew.
  bool insert(const Gf2Vector& v);

  bool contains(const Gf2Vector& v) const;

  /// Coefficients c (one per generator) with sum c_i g_i = v, if v lies in
  /// the span.
  std::optional<std::vector<std::uint8_t>> express(const Gf2Vector& v) const;

  /// Subspace of vectors in this span that vanish outside `support`.
  Gf2Span restricted_to(const std::vector<bool>& support) const;

 private:
  struct Row {
    Gf2Vector value;
    std::vector<std::uint8_t> combination;  // over generators_
    std::size_t pivot;
  };

  std::size_t dimension_;
  std::vector<Gf2Vector> generators_;
  std::vector<Row> rows_;
};

/// Rank by plain Gaussian elimination on a copy; kept separate from Gf2Span
/// so certificates can be re-checked by a second routine.
std::size_t gf2_rank(std::vector<Gf2Vector> vectors);

}  // namespace circle5
