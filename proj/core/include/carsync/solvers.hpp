#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "carsync/constructions.hpp"
#include "carsync/partial_dfa.hpp"
#include "carsync/state_set.hpp"
#include "carsync/transformation.hpp"

namespace carsync {

struct SearchLimits {
  std::size_t max_nodes = 10'000'000;
  /// Unbounded when empty.
  std::optional<std::size_t> max_length;
};

struct SearchResult {
  std::size_t length = 0;
  Word witness;
  /// Distinct search nodes discovered.
  std::size_t explored = 0;
  /// Largest BFS layer.
  std::size_t frontier_peak = 0;
  /// Set reached by the witness when the search is over state sets.
  std::optional<StateSet> reached;
};

/// Goal of a powerset search: any singleton, or one specific state.
struct AnySingleton {};
using SyncTarget = std::variant<AnySingleton, StateId>;

/// Breadth-first search over active sets reachable from start by non-empty
/// words that kill no active state. Among shortest words the witness is the
/// lexicographically least by letter index. Returns std::nullopt when no
/// reachable set meets the goal; throws ResourceCapExceeded when the limits
/// cut the search short.
std::optional<SearchResult> shortest_sync_from(const PartialDfa& dfa,
                                               StateSet start,
                                               SyncTarget target,
                                               const SearchLimits& limits = {});

/// Shortest carefully synchronising word: search from the full state set.
std::optional<SearchResult> shortest_careful_sync(
    const PartialDfa& dfa, const SearchLimits& limits = {});

/// Depth of a target: transformation BFS for ConstantTo / ExactTransformation,
/// powerset BFS from the source for SubsetToState.
std::optional<SearchResult> depth_of(const PartialDfa& dfa,
                                     const TargetSpec& target,
                                     const SearchLimits& limits = {});

/// One element of the generated semigroup with its BFS bookkeeping.
struct SemigroupElement {
  PartialTransformation value;
  std::size_t depth = 0;
  /// Index of the element this one extends, or npos for generators.
  std::size_t parent = static_cast<std::size_t>(-1);
  LetterId letter = 0;
};

/// All elements of the semigroup generated by the letters, in BFS (and hence
/// shortlex witness) order. Throws ResourceCapExceeded past limits.
std::vector<SemigroupElement> enumerate_semigroup(
    const PartialDfa& dfa, const SearchLimits& limits = {});

/// Canonical word of elements[index].
Word witness_of(const std::vector<SemigroupElement>& elements,
                std::size_t index);

struct SemigroupSummary {
  std::size_t element_count = 0;
  std::size_t diameter = 0;
  PartialTransformation witness_depth_element;
  Word witness_word;
};

/// Element count and diameter of the generated semigroup; the witness is the
/// first element found at maximum depth.
SemigroupSummary semigroup_summary(const PartialDfa& dfa,
                                   const SearchLimits& limits = {});

/// Reference oracle: enumerates every non-empty word in length-then-lex order
/// up to max_length and returns the first that satisfies the goal. No
/// pruning or deduplication; for validation at test scale only.
std::optional<SearchResult> brute_force_shortest(const PartialDfa& dfa,
                                                 const TargetSpec& target,
                                                 std::size_t max_length);
std::optional<SearchResult> brute_force_shortest_sync(const PartialDfa& dfa,
                                                      std::size_t max_length);

/// Whether w satisfies target in dfa (the predicate both solvers search for).
bool satisfies(const PartialDfa& dfa, const TargetSpec& target, const Word& w);

}  // namespace carsync
