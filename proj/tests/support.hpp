#pragma once

#include <random>
#include <string>
#include <vector>

#include "carsync/partial_dfa.hpp"

namespace carsync::testing {

/// Random partial DFA with n states and m letters; each transition is
/// undefined with probability `undefined_rate`.
inline PartialDfa random_dfa(std::mt19937& rng, std::size_t n, std::size_t m,
                             double undefined_rate = 0.3) {
  std::uniform_int_distribution<StateId> pick(0, static_cast<StateId>(n - 1));
  std::bernoulli_distribution undefined(undefined_rate);
  std::vector<std::string> states;
  std::vector<std::string> letters;
  for (std::size_t q = 0; q < n; ++q) states.push_back("q" + std::to_string(q));
  for (std::size_t a = 0; a < m; ++a) letters.push_back(std::string(1, char('a' + a)));
  std::vector<std::vector<StateId>> delta(m, std::vector<StateId>(n));
  for (auto& row : delta) {
    for (auto& t : row) t = undefined(rng) ? kUndefined : pick(rng);
  }
  return PartialDfa("random", std::move(states), std::move(letters),
                    std::move(delta));
}

inline Word random_word(std::mt19937& rng, std::size_t m, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<LetterId> letter(0, static_cast<LetterId>(m - 1));
  Word w(len(rng));
  for (auto& a : w) a = letter(rng);
  return w;
}

inline PartialTransformation random_transformation(std::mt19937& rng,
                                                   std::size_t n) {
  std::uniform_int_distribution<StateId> pick(0, static_cast<StateId>(n));
  std::vector<StateId> image(n);
  for (auto& v : image) {
    v = pick(rng);
    if (v == n) v = kUndefined;
  }
  return PartialTransformation(std::move(image));
}

/// Single-letter automaton whose letter acts as `image`.
inline PartialDfa unary_dfa(const std::vector<StateId>& image) {
  std::vector<std::string> states;
  for (std::size_t q = 0; q < image.size(); ++q) {
    states.push_back(std::to_string(q + 1));
  }
  return PartialDfa("unary", std::move(states), {"a"}, {image});
}

}  // namespace carsync::testing
