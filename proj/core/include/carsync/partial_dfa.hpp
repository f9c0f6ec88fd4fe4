#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "carsync/state_set.hpp"
#include "carsync/transformation.hpp"
#include "carsync/types.hpp"

namespace carsync {

/// A partial deterministic semi-automaton (Q, Sigma, delta).
///
/// The transition table is dense and indexed [letter][state]; kUndefined marks
/// a missing transition. Letter index order is the declaration order and is
/// the tie-breaking order used by every search. Objects are not validated on
/// construction; call validate() or use the builders, which always produce
/// well-formed automata.
class PartialDfa {
 public:
  PartialDfa() = default;
  PartialDfa(std::string name, std::vector<std::string> state_names,
             std::vector<std::string> letter_names,
             std::vector<std::vector<StateId>> delta);

  const std::string& name() const { return name_; }
  std::size_t num_states() const { return state_names_.size(); }
  std::size_t num_letters() const { return letter_names_.size(); }

  const std::vector<std::string>& state_names() const { return state_names_; }
  const std::vector<std::string>& letter_names() const { return letter_names_; }
  const std::string& state_name(StateId q) const { return state_names_.at(q); }
  const std::string& letter_name(LetterId a) const {
    return letter_names_.at(a);
  }
  const std::vector<std::vector<StateId>>& delta() const { return delta_; }

  /// delta(q, a), or kUndefined. Throws InvalidState / InvalidLetter.
  StateId target(StateId q, LetterId a) const;

  std::optional<StateId> find_state(std::string_view name) const;
  std::optional<LetterId> find_letter(std::string_view name) const;

  StateSet all_states() const { return StateSet::full(num_states()); }

  /// The transformation expressed by a single letter.
  PartialTransformation letter_transformation(LetterId a) const;

  friend bool operator==(const PartialDfa&, const PartialDfa&) = default;

 private:
  std::string name_;
  std::vector<std::string> state_names_;
  std::vector<std::string> letter_names_;
  std::vector<std::vector<StateId>> delta_;
};

/// Result of applying a letter or word to a set: std::nullopt is KILL, i.e.
/// at least one member hit an undefined transition.
using StepResult = std::optional<StateSet>;

StepResult apply_letter(const PartialDfa& dfa, StateSet s, LetterId a);

/// Left-to-right fold of apply_letter; KILL is absorbing and the empty word
/// returns s unchanged.
StepResult apply_word(const PartialDfa& dfa, StateSet s, const Word& w);

/// The partial transformation expressed by w; killed states map to
/// kUndefined. The empty word yields the identity.
PartialTransformation word_transformation(const PartialDfa& dfa,
                                          const Word& w);

/// True iff w is non-empty and expresses a total constant transformation.
bool is_carefully_synchronizing(const PartialDfa& dfa, const Word& w);

/// Structural defects of dfa as human-readable lines; empty iff well formed.
std::vector<std::string> validate(const PartialDfa& dfa);

/// Renders w as space-separated letter names.
std::string format_word(const PartialDfa& dfa, const Word& w);

/// Parses space-separated letter names. Throws InvalidLetter on unknown names.
Word parse_word(const PartialDfa& dfa, std::string_view text);

/// Renders s as "{a, b, c}" using state names in index order.
std::string format_set(const PartialDfa& dfa, StateSet s);

}  // namespace carsync
