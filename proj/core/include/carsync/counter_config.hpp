#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "carsync/constructions.hpp"
#include "carsync/state_set.hpp"

namespace carsync {

/// Occupancy of a counter automaton while a decrement is in flight.
struct ShiftDetail {
  /// Number of positions the digit block is displaced to the right.
  unsigned offset = 0;
  /// Digits found at positions offset+1..k.
  std::vector<unsigned> digits;
  /// Value held by an active parking state l_j with j < base-1.
  std::optional<unsigned> parked;
  /// lz is active.
  bool transit = false;
  /// l_{base-1} is active.
  bool resurrect = false;
  /// Active P positions, ascending.
  std::vector<unsigned> p_positions;

  friend bool operator==(const ShiftDetail&, const ShiftDetail&) = default;
};

struct Counting {
  std::vector<unsigned> digits;  // most significant first
  friend bool operator==(const Counting&, const Counting&) = default;
};
struct ShiftingRight {
  ShiftDetail detail;
  friend bool operator==(const ShiftingRight&, const ShiftingRight&) = default;
};
struct ShiftingLeft {
  ShiftDetail detail;
  friend bool operator==(const ShiftingLeft&, const ShiftingLeft&) = default;
};
struct Drained {
  std::vector<unsigned> positions;
  friend bool operator==(const Drained&, const Drained&) = default;
};
struct Reset {
  std::vector<unsigned> positions;
  friend bool operator==(const Reset&, const Reset&) = default;
};
struct Invalid {
  std::string reason;
  friend bool operator==(const Invalid&, const Invalid&) = default;
};

using CounterConfig =
    std::variant<Counting, ShiftingRight, ShiftingLeft, Drained, Reset, Invalid>;

/// Interprets an active set of a counter automaton. Throws SpecMismatch for
/// non-counter families.
CounterConfig decode_config(const ConstructionSpec& spec, StateSet s);

/// The canonical active set of a digit vector: one chain state per position.
StateSet encode_counting(const ConstructionSpec& spec,
                         const std::vector<unsigned>& digits);

/// Digit vector of value in the counter base, k digits, most significant first.
std::vector<unsigned> to_digits(const ConstructionSpec& spec,
                                std::uint64_t value);

/// One-line human-readable rendering, e.g. "Counting[1,0,2,0,0]".
std::string describe(const CounterConfig& config);

}  // namespace carsync
