#include "carsync/solvers.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>

namespace carsync {

namespace {

constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

[[noreturn]] void node_cap(std::size_t max_nodes) {
  throw ResourceCapExceeded("search exceeded max_nodes=" +
                            std::to_string(max_nodes));
}

[[noreturn]] void length_cap(std::size_t max_length) {
  throw ResourceCapExceeded("search exceeded max_length=" +
                            std::to_string(max_length));
}

void check_set(const PartialDfa& dfa, StateSet s) {
  if (dfa.num_states() > kMaxStates) {
    throw InvalidState("powerset search supports at most 64 states");
  }
  if (dfa.num_states() < kMaxStates && (s.bits() >> dfa.num_states()) != 0) {
    throw InvalidState("state set has members outside the automaton");
  }
}

// Successor table with one row per letter, used by the powerset search.
struct Successors {
  explicit Successors(const PartialDfa& dfa) : rows(dfa.delta()) {}

  // Image of `set` under letter a, or 0 (never a valid non-empty image) on
  // KILL.
  std::uint64_t step(std::uint64_t set, LetterId a) const {
    const auto& row = rows[a];
    std::uint64_t out = 0;
    for (std::uint64_t rest = set; rest != 0; rest &= rest - 1) {
      const StateId next = row[static_cast<std::size_t>(std::countr_zero(rest))];
      if (next == kUndefined) return 0;
      out |= std::uint64_t{1} << next;
    }
    return out;
  }

  const std::vector<std::vector<StateId>>& rows;
};

struct SetParent {
  std::uint64_t pred;
  LetterId letter;
  std::uint32_t depth;
};

struct CayleyResult {
  std::vector<SemigroupElement> elements;
  std::size_t peak = 0;
  std::size_t hit = kNoParent;
};

// Breadth-first enumeration of the letter-generated semigroup, extending
// elements on the right. Stops early when `goal` is found.
CayleyResult cayley_bfs(const PartialDfa& dfa, const SearchLimits& limits,
                        const PartialTransformation* goal) {
  CayleyResult out;
  auto& elements = out.elements;
  std::unordered_map<PartialTransformation, std::size_t> index;
  const auto m = static_cast<LetterId>(dfa.num_letters());

  std::vector<PartialTransformation> letters;
  letters.reserve(m);
  for (LetterId a = 0; a < m; ++a) letters.push_back(dfa.letter_transformation(a));

  auto discover = [&](PartialTransformation value, std::size_t depth,
                      std::size_t parent, LetterId a) -> bool {
    if (index.contains(value)) return false;
    if (elements.size() >= limits.max_nodes) node_cap(limits.max_nodes);
    index.emplace(value, elements.size());
    const bool is_goal = goal != nullptr && value == *goal;
    elements.push_back({std::move(value), depth, parent, a});
    if (is_goal) out.hit = elements.size() - 1;
    return is_goal;
  };

  if (m == 0) return out;
  if (limits.max_length && *limits.max_length < 1) length_cap(0);
  for (LetterId a = 0; a < m; ++a) {
    if (discover(letters[a], 1, kNoParent, a)) {
      out.peak = elements.size();
      return out;
    }
  }

  std::size_t lo = 0;
  std::size_t hi = elements.size();
  std::size_t depth = 1;
  while (lo < hi) {
    out.peak = std::max(out.peak, hi - lo);
    if (limits.max_length && depth + 1 > *limits.max_length) {
      // The next layer might be empty; only a non-empty one is a cap.
      for (std::size_t e = lo; e < hi; ++e) {
        for (LetterId a = 0; a < m; ++a) {
          if (!index.contains(compose(elements[e].value, letters[a]))) {
            length_cap(*limits.max_length);
          }
        }
      }
      return out;
    }
    for (std::size_t e = lo; e < hi; ++e) {
      for (LetterId a = 0; a < m; ++a) {
        if (discover(compose(elements[e].value, letters[a]), depth + 1, e, a)) {
          return out;
        }
      }
    }
    lo = hi;
    hi = elements.size();
    ++depth;
  }
  return out;
}

std::optional<SearchResult> first_hit(const PartialDfa& dfa,
                                      std::size_t max_length,
                                      auto&& accepts) {
  const auto m = static_cast<LetterId>(dfa.num_letters());
  SearchResult result;
  if (m == 0) return std::nullopt;
  for (std::size_t len = 1; len <= max_length; ++len) {
    Word w(len, 0);
    while (true) {
      ++result.explored;
      if (accepts(w)) {
        result.length = len;
        result.witness = w;
        return result;
      }
      // Odometer increment, last letter fastest.
      std::size_t pos = len;
      while (pos > 0 && w[pos - 1] + 1 == m) w[--pos] = 0;
      if (pos == 0) break;
      ++w[pos - 1];
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<SearchResult> shortest_sync_from(const PartialDfa& dfa,
                                               StateSet start,
                                               SyncTarget target,
                                               const SearchLimits& limits) {
  check_set(dfa, start);
  if (start.empty()) throw InvalidState("search needs a non-empty start set");
  std::uint64_t goal_bits = 0;
  if (const auto* q = std::get_if<StateId>(&target)) {
    if (*q >= dfa.num_states()) {
      throw InvalidState("target state " + std::to_string(*q) +
                         " out of range");
    }
    goal_bits = std::uint64_t{1} << *q;
  }
  auto is_goal = [&](std::uint64_t s) {
    return goal_bits != 0 ? s == goal_bits : std::has_single_bit(s);
  };

  const Successors succ(dfa);
  const auto m = static_cast<LetterId>(dfa.num_letters());
  std::unordered_map<std::uint64_t, SetParent> parents;
  std::vector<std::uint64_t> layer{start.bits()};
  std::vector<std::uint64_t> next;
  std::size_t peak = 0;
  std::uint32_t depth = 0;

  auto finish = [&](std::uint64_t found) {
    SearchResult result;
    result.explored = parents.size();
    result.frontier_peak = std::max(peak, next.size());
    result.reached = StateSet(found);
    for (std::uint64_t node = found;;) {
      const SetParent& p = parents.at(node);
      result.witness.push_back(p.letter);
      if (p.depth == 1) break;
      node = p.pred;
    }
    std::reverse(result.witness.begin(), result.witness.end());
    result.length = result.witness.size();
    return result;
  };

  while (!layer.empty()) {
    if (limits.max_length && depth + 1 > *limits.max_length) {
      for (std::uint64_t s : layer) {
        for (LetterId a = 0; a < m; ++a) {
          const std::uint64_t t = succ.step(s, a);
          if (t != 0 && !parents.contains(t)) length_cap(*limits.max_length);
        }
      }
      return std::nullopt;
    }
    next.clear();
    for (std::uint64_t s : layer) {
      for (LetterId a = 0; a < m; ++a) {
        const std::uint64_t t = succ.step(s, a);
        if (t == 0 || parents.contains(t)) continue;
        if (parents.size() >= limits.max_nodes) node_cap(limits.max_nodes);
        parents.emplace(t, SetParent{s, a, depth + 1});
        if (is_goal(t)) return finish(t);
        next.push_back(t);
      }
    }
    peak = std::max(peak, next.size());
    layer.swap(next);
    ++depth;
  }
  return std::nullopt;
}

std::optional<SearchResult> shortest_careful_sync(const PartialDfa& dfa,
                                                  const SearchLimits& limits) {
  return shortest_sync_from(dfa, dfa.all_states(), AnySingleton{}, limits);
}

std::optional<SearchResult> depth_of(const PartialDfa& dfa,
                                     const TargetSpec& target,
                                     const SearchLimits& limits) {
  if (const auto* sub = std::get_if<SubsetToState>(&target)) {
    return shortest_sync_from(dfa, sub->source, sub->target, limits);
  }
  PartialTransformation goal;
  if (const auto* c = std::get_if<ConstantTo>(&target)) {
    if (c->state >= dfa.num_states()) {
      throw InvalidState("target state out of range");
    }
    goal = PartialTransformation::constant(dfa.num_states(), c->state);
  } else {
    goal = std::get<ExactTransformation>(target).f;
    if (goal.size() != dfa.num_states()) {
      throw DomainMismatch("target transformation has size " +
                           std::to_string(goal.size()) + ", automaton has " +
                           std::to_string(dfa.num_states()) + " states");
    }
  }
  const CayleyResult bfs = cayley_bfs(dfa, limits, &goal);
  if (bfs.hit == kNoParent) return std::nullopt;
  SearchResult result;
  result.witness = witness_of(bfs.elements, bfs.hit);
  result.length = result.witness.size();
  result.explored = bfs.elements.size();
  result.frontier_peak = bfs.peak;
  return result;
}

std::vector<SemigroupElement> enumerate_semigroup(const PartialDfa& dfa,
                                                  const SearchLimits& limits) {
  return cayley_bfs(dfa, limits, nullptr).elements;
}

Word witness_of(const std::vector<SemigroupElement>& elements,
                std::size_t index) {
  Word w;
  for (std::size_t e = index; e != kNoParent; e = elements.at(e).parent) {
    w.push_back(elements[e].letter);
  }
  std::reverse(w.begin(), w.end());
  return w;
}

SemigroupSummary semigroup_summary(const PartialDfa& dfa,
                                   const SearchLimits& limits) {
  const auto elements = enumerate_semigroup(dfa, limits);
  SemigroupSummary summary;
  summary.element_count = elements.size();
  if (elements.empty()) return summary;
  // BFS order: the first element of the last layer is the deepest one with
  // the least witness.
  std::size_t deepest = elements.size() - 1;
  while (deepest > 0 && elements[deepest - 1].depth == elements.back().depth) {
    --deepest;
  }
  summary.diameter = elements[deepest].depth;
  summary.witness_depth_element = elements[deepest].value;
  summary.witness_word = witness_of(elements, deepest);
  return summary;
}

bool satisfies(const PartialDfa& dfa, const TargetSpec& target,
               const Word& w) {
  if (w.empty()) return false;
  if (const auto* sub = std::get_if<SubsetToState>(&target)) {
    const auto image = apply_word(dfa, sub->source, w);
    return image && *image == StateSet::singleton(sub->target);
  }
  const auto f = word_transformation(dfa, w);
  if (const auto* c = std::get_if<ConstantTo>(&target)) {
    return f == PartialTransformation::constant(dfa.num_states(), c->state);
  }
  return f == std::get<ExactTransformation>(target).f;
}

std::optional<SearchResult> brute_force_shortest(const PartialDfa& dfa,
                                                 const TargetSpec& target,
                                                 std::size_t max_length) {
  return first_hit(dfa, max_length,
                   [&](const Word& w) { return satisfies(dfa, target, w); });
}

std::optional<SearchResult> brute_force_shortest_sync(const PartialDfa& dfa,
                                                      std::size_t max_length) {
  auto result = first_hit(dfa, max_length, [&](const Word& w) {
    return is_carefully_synchronizing(dfa, w);
  });
  if (result) {
    result->reached = StateSet::singleton(
        word_transformation(dfa, result->witness).image().front());
  }
  return result;
}

}  // namespace carsync
