#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "carsync/solvers.hpp"
#include "carsync/transformation.hpp"

namespace carsync {

/// Square matrix with non-negative integer entries, row-major. Images of
/// partial transformations have entries in {0, 1} with at most one 1 per row.
class ZeroOneMatrix {
 public:
  ZeroOneMatrix() = default;
  explicit ZeroOneMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {}
  ZeroOneMatrix(std::size_t n, std::vector<std::uint32_t> entries);

  static ZeroOneMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }
  std::uint32_t& operator()(std::size_t i, std::size_t j) {
    return entries_[i * n_ + j];
  }
  const std::vector<std::uint32_t>& entries() const { return entries_; }

  bool is_zero_one() const;

  friend bool operator==(const ZeroOneMatrix&, const ZeroOneMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> entries_;
};

/// Entry (i, j) is 1 iff f(i) = j; undefined rows are zero.
ZeroOneMatrix to_matrix(const PartialTransformation& f);

/// Integer matrix product. Throws DimensionMismatch.
ZeroOneMatrix mat_mul(const ZeroOneMatrix& a, const ZeroOneMatrix& b);

struct MatrixSemigroupSummary {
  std::size_t element_count = 0;
  std::size_t diameter = 0;
};

/// BFS over products of the generators (right multiplication, non-empty
/// products only).
MatrixSemigroupSummary matrix_semigroup_summary(
    std::span<const ZeroOneMatrix> generators, const SearchLimits& limits = {});

}  // namespace carsync

template <>
struct std::hash<carsync::ZeroOneMatrix> {
  std::size_t operator()(const carsync::ZeroOneMatrix& m) const noexcept;
};
