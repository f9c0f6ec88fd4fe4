#include "carsync/state_set.hpp"

#include <string>

namespace carsync {

namespace {

void check_range(StateId q) {
  if (q >= kMaxStates) {
    throw InvalidState("state " + std::to_string(q) +
                       " exceeds the 64-state set capacity");
  }
}

}  // namespace

StateSet::StateSet(std::initializer_list<StateId> members) {
  for (StateId q : members) insert(q);
}

StateSet StateSet::full(std::size_t n) {
  if (n > kMaxStates) {
    throw InvalidState("state sets hold at most 64 states, got " +
                       std::to_string(n));
  }
  return StateSet(n == kMaxStates ? ~std::uint64_t{0}
                                  : (std::uint64_t{1} << n) - 1);
}

StateSet StateSet::singleton(StateId q) {
  check_range(q);
  return StateSet(std::uint64_t{1} << q);
}

void StateSet::insert(StateId q) {
  check_range(q);
  bits_ |= std::uint64_t{1} << q;
}

void StateSet::erase(StateId q) {
  check_range(q);
  bits_ &= ~(std::uint64_t{1} << q);
}

std::vector<StateId> StateSet::to_vector() const {
  std::vector<StateId> out;
  out.reserve(size());
  for_each([&](StateId q) { out.push_back(q); });
  return out;
}

}  // namespace carsync
