#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "carsync/types.hpp"

namespace carsync {

using BigInt = boost::multiprecision::cpp_int;

/// Cycle lengths (each >= 2) of a permutation, ascending; fixed points are
/// implicit.
using CycleType = std::vector<std::uint64_t>;

/// Landau's function g(n): the maximum lcm over partitions of n, with
/// g(0) = 1. Exact for any n.
BigInt landau(unsigned n);

/// A cycle type of maximum order on n points. Each cycle is a prime power;
/// among equal lcms the dynamic program keeps the first choice found when
/// primes are processed in increasing order.
CycleType landau_cycle_type(unsigned n);

/// A bijection on {0, ..., n-1}. Printed 1-based by the CLI.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless image is a bijection.
  explicit Permutation(std::vector<StateId> image);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return image_.size(); }
  StateId operator()(StateId i) const { return image_.at(i); }
  const std::vector<StateId>& image() const { return image_; }

  /// Lengths of all cycles including fixed points, in order of smallest
  /// element.
  std::vector<std::uint64_t> cycle_lengths() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<StateId> image_;
};

/// lcm of the cycle lengths.
BigInt order(const Permutation& p);

/// landau_cycle_type(n) laid out consecutively from point 0 in ascending
/// cycle length, remaining points fixed. Order is landau(n).
Permutation max_order_permutation(unsigned n);

/// e-fold composition; e = 0 gives the identity.
Permutation permutation_power(const Permutation& p, std::uint64_t e);

}  // namespace carsync
