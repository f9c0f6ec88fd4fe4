#pragma once

#include <optional>
#include <vector>

namespace carsync {

/// A k-element subset of {1, ..., 2k}, members sorted ascending.
struct KSubset {
  std::vector<unsigned> members;

  friend bool operator==(const KSubset&, const KSubset&) = default;
  friend auto operator<=>(const KSubset&, const KSubset&) = default;
};

/// Lexicographic successor of s among subsets of {1, ..., two_k} of size
/// two_k / 2: with i the largest member whose successor is absent and j the
/// largest non-member above which s is full, drop i and everything above j,
/// then add i+1, ..., i + two_k - j + 1. Returns std::nullopt for the last
/// subset {k+1, ..., 2k}. Throws InvalidSubset if s is malformed.
std::optional<KSubset> next_k_subset(const KSubset& s, unsigned two_k);

/// All k-subsets of {1, ..., 2k} in lexicographic order, starting at
/// {1, ..., k}.
std::vector<KSubset> all_k_subsets(unsigned k);

}  // namespace carsync
