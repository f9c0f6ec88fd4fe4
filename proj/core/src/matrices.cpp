#include "carsync/matrices.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace carsync {

ZeroOneMatrix::ZeroOneMatrix(std::size_t n, std::vector<std::uint32_t> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n * n) {
    throw DimensionMismatch("expected " + std::to_string(n * n) +
                            " entries, got " + std::to_string(entries_.size()));
  }
}

ZeroOneMatrix ZeroOneMatrix::identity(std::size_t n) {
  ZeroOneMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool ZeroOneMatrix::is_zero_one() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](std::uint32_t v) { return v <= 1; });
}

ZeroOneMatrix to_matrix(const PartialTransformation& f) {
  ZeroOneMatrix m(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const StateId j = f.image()[i];
    if (j != kUndefined) m(i, j) = 1;
  }
  return m;
}

ZeroOneMatrix mat_mul(const ZeroOneMatrix& a, const ZeroOneMatrix& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("cannot multiply " + std::to_string(a.size()) +
                            "x" + std::to_string(a.size()) + " by " +
                            std::to_string(b.size()) + "x" +
                            std::to_string(b.size()));
  }
  const auto n = a.size();
  ZeroOneMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      const std::uint32_t x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += x * b(l, j);
    }
  }
  return out;
}

MatrixSemigroupSummary matrix_semigroup_summary(
    std::span<const ZeroOneMatrix> generators, const SearchLimits& limits) {
  MatrixSemigroupSummary summary;
  std::unordered_set<ZeroOneMatrix> seen;
  std::vector<ZeroOneMatrix> layer;
  for (const auto& g : generators) {
    if (g.size() != generators.front().size()) {
      throw DimensionMismatch("generators differ in size");
    }
    if (seen.insert(g).second) layer.push_back(g);
  }
  std::size_t depth = 1;
  std::vector<ZeroOneMatrix> next;
  while (!layer.empty()) {
    summary.diameter = depth;
    next.clear();
    for (const auto& x : layer) {
      for (const auto& g : generators) {
        ZeroOneMatrix y = mat_mul(x, g);
        if (seen.contains(y)) continue;
        if (seen.size() >= limits.max_nodes) {
          throw ResourceCapExceeded("matrix semigroup exceeded max_nodes=" +
                                    std::to_string(limits.max_nodes));
        }
        seen.insert(y);
        next.push_back(std::move(y));
      }
    }
    layer.swap(next);
    ++depth;
  }
  summary.element_count = seen.size();
  return summary;
}

}  // namespace carsync

std::size_t std::hash<carsync::ZeroOneMatrix>::operator()(
    const carsync::ZeroOneMatrix& m) const noexcept {
  std::size_t h = 1469598103934665603ULL ^ m.size();
  for (std::uint32_t v : m.entries()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return h;
}
