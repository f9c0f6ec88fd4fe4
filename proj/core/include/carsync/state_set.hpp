#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include "carsync/types.hpp"

namespace carsync {

/// Largest automaton the powerset machinery supports.
inline constexpr std::size_t kMaxStates = 64;

/// Set of states as a 64-bit mask keyed by state index. Iteration and
/// to_vector() always report members in increasing index order.
class StateSet {
 public:
  constexpr StateSet() = default;
  constexpr explicit StateSet(std::uint64_t bits) : bits_(bits) {}
  StateSet(std::initializer_list<StateId> members);

  static StateSet full(std::size_t n);
  static StateSet singleton(StateId q);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  bool contains(StateId q) const {
    return q < kMaxStates && ((bits_ >> q) & 1U) != 0;
  }
  void insert(StateId q);
  void erase(StateId q);

  /// Smallest member; undefined behaviour on an empty set.
  StateId front() const {
    return static_cast<StateId>(std::countr_zero(bits_));
  }

  std::vector<StateId> to_vector() const;

  /// Calls fn(q) for each member in increasing order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
      fn(static_cast<StateId>(std::countr_zero(rest)));
    }
  }

  friend constexpr bool operator==(StateSet, StateSet) = default;
  friend constexpr auto operator<=>(StateSet, StateSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace carsync

template <>
struct std::hash<carsync::StateSet> {
  std::size_t operator()(carsync::StateSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
