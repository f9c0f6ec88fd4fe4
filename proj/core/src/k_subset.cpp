#include "carsync/k_subset.hpp"

#include <algorithm>
#include <string>

#include "carsync/types.hpp"

namespace carsync {

namespace {

void check_subset(const KSubset& s, unsigned two_k) {
  if (two_k == 0 || two_k % 2 != 0) {
    throw InvalidSubset("universe size must be a positive even number, got " +
                        std::to_string(two_k));
  }
  if (s.members.size() != two_k / 2) {
    throw InvalidSubset("expected " + std::to_string(two_k / 2) +
                        " members, got " + std::to_string(s.members.size()));
  }
  for (std::size_t i = 0; i < s.members.size(); ++i) {
    const unsigned v = s.members[i];
    if (v < 1 || v > two_k) {
      throw InvalidSubset("member " + std::to_string(v) + " outside [1, " +
                          std::to_string(two_k) + "]");
    }
    if (i > 0 && s.members[i - 1] >= v) {
      throw InvalidSubset("members must be strictly ascending");
    }
  }
}

}  // namespace

std::optional<KSubset> next_k_subset(const KSubset& s, unsigned two_k) {
  check_subset(s, two_k);
  std::vector<bool> in(two_k + 2, false);
  for (unsigned v : s.members) in[v] = true;

  // j: largest non-member such that every element above it is a member.
  unsigned j = two_k;
  while (j >= 1 && in[j]) --j;
  // i: largest member whose successor is not a member; it lies below j.
  unsigned i = j;
  while (i >= 1 && !(in[i] && !in[i + 1])) --i;
  if (i == 0) return std::nullopt;

  KSubset next;
  for (unsigned v : s.members) {
    if (v < i) next.members.push_back(v);
  }
  // Removing i and the (two_k - j) members above j frees two_k - j + 1 slots.
  for (unsigned v = i + 1; v <= i + two_k - j + 1; ++v) {
    next.members.push_back(v);
  }
  return next;
}

std::vector<KSubset> all_k_subsets(unsigned k) {
  std::vector<KSubset> out;
  KSubset s;
  for (unsigned v = 1; v <= k; ++v) s.members.push_back(v);
  std::optional<KSubset> cur = s;
  while (cur) {
    out.push_back(*cur);
    cur = next_k_subset(*cur, 2 * k);
  }
  return out;
}

}  // namespace carsync
