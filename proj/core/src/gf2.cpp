#include "circle5/gf2.hpp"

#include <algorithm>
#include <utility>

#include "circle5/error.hpp"

namespace circle5 {

Gf2Vector gf2_add(const Gf2Vector& x, const Gf2Vector& y) {
  if (x.size() != y.size()) throw InputError("gf2_add: dimension mismatch");
  Gf2Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = (x[i] ^ y[i]) & 1u;
  return out;
}

bool gf2_is_zero(const Gf2Vector& x) {
  return std::all_of(x.begin(), x.end(), [](std::uint8_t b) { return (b & 1u) == 0; });
}

Gf2Span::Gf2Span(std::size_t dimension) : dimension_(dimension) {}

bool Gf2Span::insert(const Gf2Vector& v) {
  if (v.size() != dimension_) throw InputError("Gf2Span: dimension mismatch");
  const std::size_t index = generators_.size();
  generators_.push_back(v);
  for (auto& row : rows_) row.combination.push_back(0);

  Row candidate{v, std::vector<std::uint8_t>(generators_.size(), 0), 0};
  candidate.combination[index] = 1;
  for (auto& bit : candidate.value) bit &= 1u;
  for (const auto& row : rows_) {
    if (candidate.value[row.pivot]) {
      candidate.value = gf2_add(candidate.value, row.value);
      candidate.combination = gf2_add(candidate.combination, row.combination);
    }
  }
  const auto it = std::find(candidate.value.begin(), candidate.value.end(), 1);
  if (it == candidate.value.end()) return false;
  candidate.pivot = static_cast<std::size_t>(it - candidate.value.begin());
  // Keep the echelon form reduced: clear the new pivot from older rows.
  for (auto& row : rows_) {
    if (row.value[candidate.pivot]) {
      row.value = gf2_add(row.value, candidate.value);
      row.combination = gf2_add(row.combination, candidate.combination);
    }
  }
  rows_.push_back(std::move(candidate));
  return true;
}

std::optional<std::vector<std::uint8_t>> Gf2Span::express(const Gf2Vector& v) const {
  if (v.size() != dimension_) throw InputError("Gf2Span: dimension mismatch");
  Gf2Vector rest = v;
  for (auto& bit : rest) bit &= 1u;
  std::vector<std::uint8_t> combination(generators_.size(), 0);
  for (const auto& row : rows_) {
    if (rest[row.pivot]) {
      rest = gf2_add(rest, row.value);
      combination = gf2_add(combination, row.combination);
    }
  }
  if (!gf2_is_zero(rest)) return std::nullopt;
  return combination;
}

bool Gf2Span::contains(const Gf2Vector& v) const { return express(v).has_value(); }

Gf2Span Gf2Span::restricted_to(const std::vector<bool>& support) const {
  if (support.size() != dimension_) throw InputError("Gf2Span: dimension mismatch");
  // Eliminate the coordinates outside the support; what survives with a
  // zero outside-part spans the intersection.
  std::vector<std::size_t> outside;
  for (std::size_t i = 0; i < dimension_; ++i) {
    if (!support[i]) outside.push_back(i);
  }
  std::vector<Gf2Vector> work;
  for (const auto& row : rows_) work.push_back(row.value);
  std::size_t next = 0;
  for (std::size_t coord : outside) {
    std::size_t pivot = next;
    while (pivot < work.size() && !work[pivot][coord]) ++pivot;
    if (pivot == work.size()) continue;
    std::swap(work[pivot], work[next]);
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (r != next && work[r][coord]) work[r] = gf2_add(work[r], work[next]);
    }
    ++next;
  }
  Gf2Span result(dimension_);
  for (std::size_t r = next; r < work.size(); ++r) result.insert(work[r]);
  return result;
}

std::size_t gf2_rank(std::vector<Gf2Vector> vectors) {
  if (vectors.empty()) return 0;
  const std::size_t n = vectors.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < vectors.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < vectors.size() && (vectors[pivot][col] & 1u) == 0) ++pivot;
    if (pivot == vectors.size()) continue;
    std::swap(vectors[pivot], vectors[rank]);
    for (std::size_t r = rank + 1; r < vectors.size(); ++r) {
      if (vectors[r][col] & 1u) vectors[r] = gf2_add(vectors[r], vectors[rank]);
    }
    ++rank;
  }
  return rank;
}

}  // namespace circle5
