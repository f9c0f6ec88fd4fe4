#include "carsync/partial_dfa.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_set>

namespace carsync {

PartialDfa::PartialDfa(std::string name, std::vector<std::string> state_names,
                       std::vector<std::string> letter_names,
                       std::vector<std::vector<StateId>> delta)
    : name_(std::move(name)),
      state_names_(std::move(state_names)),
      letter_names_(std::move(letter_names)),
      delta_(std::move(delta)) {}

StateId PartialDfa::target(StateId q, LetterId a) const {
  if (a >= num_letters()) {
    throw InvalidLetter("letter index " + std::to_string(a) +
                        " out of range");
  }
  if (q >= num_states()) {
    throw InvalidState("state index " + std::to_string(q) + " out of range");
  }
  return delta_[a][q];
}

std::optional<StateId> PartialDfa::find_state(std::string_view name) const {
  auto it = std::find(state_names_.begin(), state_names_.end(), name);
  if (it == state_names_.end()) return std::nullopt;
  return static_cast<StateId>(it - state_names_.begin());
}

std::optional<LetterId> PartialDfa::find_letter(std::string_view name) const {
  auto it = std::find(letter_names_.begin(), letter_names_.end(), name);
  if (it == letter_names_.end()) return std::nullopt;
  return static_cast<LetterId>(it - letter_names_.begin());
}

PartialTransformation PartialDfa::letter_transformation(LetterId a) const {
  if (a >= num_letters()) {
    throw InvalidLetter("letter index " + std::to_string(a) +
                        " out of range");
  }
  return PartialTransformation(delta_[a]);
}

StepResult apply_letter(const PartialDfa& dfa, StateSet s, LetterId a) {
  if (a >= dfa.num_letters()) {
    throw InvalidLetter("letter index " + std::to_string(a) +
                        " out of range");
  }
  if (dfa.num_states() < kMaxStates && (s.bits() >> dfa.num_states()) != 0) {
    throw InvalidState("state set has members outside the automaton");
  }
  const auto& row = dfa.delta()[a];
  std::uint64_t out = 0;
  for (std::uint64_t rest = s.bits(); rest != 0; rest &= rest - 1) {
    const StateId next = row[static_cast<std::size_t>(std::countr_zero(rest))];
    if (next == kUndefined) return std::nullopt;
    out |= std::uint64_t{1} << next;
  }
  return StateSet(out);
}

StepResult apply_word(const PartialDfa& dfa, StateSet s, const Word& w) {
  StepResult current = s;
  for (LetterId a : w) {
    current = apply_letter(dfa, *current, a);
    if (!current) return std::nullopt;
  }
  return current;
}

PartialTransformation word_transformation(const PartialDfa& dfa,
                                          const Word& w) {
  const auto n = dfa.num_states();
  std::vector<StateId> image(n);
  for (std::size_t q = 0; q < n; ++q) image[q] = static_cast<StateId>(q);
  for (LetterId a : w) {
    if (a >= dfa.num_letters()) {
      throw InvalidLetter("letter index " + std::to_string(a) +
                          " out of range");
    }
    const auto& row = dfa.delta()[a];
    for (auto& v : image) {
      if (v != kUndefined) v = row[v];
    }
  }
  return PartialTransformation(std::move(image));
}

bool is_carefully_synchronizing(const PartialDfa& dfa, const Word& w) {
  return !w.empty() && word_transformation(dfa, w).is_constant();
}

std::vector<std::string> validate(const PartialDfa& dfa) {
  std::vector<std::string> defects;
  const auto n = dfa.num_states();
  const auto m = dfa.num_letters();
  if (n == 0) defects.emplace_back("automaton has no states");
  if (m == 0) defects.emplace_back("automaton has no letters");
  if (n > kMaxStates) {
    defects.push_back("automaton has " + std::to_string(n) +
                      " states; at most 64 are supported");
  }

  auto check_names = [&](const std::vector<std::string>& names,
                         std::string_view what) {
    std::unordered_set<std::string> seen;
    for (const auto& name : names) {
      if (name.empty()) {
        defects.push_back("empty " + std::string(what) + " name");
        continue;
      }
      if (name.find_first_of(" \t\r\n,") != std::string::npos) {
        defects.push_back(std::string(what) + " name '" + name +
                          "' contains whitespace or ','");
      }
      if (!seen.insert(name).second) {
        defects.push_back("duplicate " + std::string(what) + " name '" +
                          name + "'");
      }
    }
  };
  check_names(dfa.state_names(), "state");
  check_names(dfa.letter_names(), "letter");

  const auto& delta = dfa.delta();
  if (delta.size() != m) {
    defects.push_back("delta has " + std::to_string(delta.size()) +
                      " rows for " + std::to_string(m) + " letters");
  }
  for (std::size_t a = 0; a < delta.size(); ++a) {
    if (delta[a].size() != n) {
      defects.push_back("delta[" + std::to_string(a) + "] has " +
                        std::to_string(delta[a].size()) + " entries for " +
                        std::to_string(n) + " states");
    }
    for (std::size_t q = 0; q < delta[a].size(); ++q) {
      const StateId t = delta[a][q];
      if (t != kUndefined && t >= n) {
        defects.push_back("delta[" + std::to_string(a) + "][" +
                          std::to_string(q) + "] out of range: " +
                          std::to_string(t));
      }
    }
  }
  return defects;
}

std::string format_word(const PartialDfa& dfa, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0) out += ' ';
    out += dfa.letter_name(w[i]);
  }
  return out;
}

Word parse_word(const PartialDfa& dfa, std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    auto a = dfa.find_letter(token);
    if (!a) throw InvalidLetter("unknown letter '" + token + "'");
    w.push_back(*a);
  }
  return w;
}

std::string format_set(const PartialDfa& dfa, StateSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](StateId q) {
    if (!first) out += ", ";
    first = false;
    out += dfa.state_name(q);
  });
  out += '}';
  return out;
}

}  // namespace carsync
