#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace carsync {

using StateId = std::uint32_t;
using LetterId = std::uint32_t;

/// Marks an undefined transition.
inline constexpr StateId kUndefined = std::numeric_limits<StateId>::max();

/// A word is a sequence of letter indices of one automaton.
using Word = std::vector<LetterId>;

/// Base class for every error raised by carsync.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidState : public Error {
 public:
  using Error::Error;
};

class InvalidLetter : public Error {
 public:
  using Error::Error;
};

class DomainMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidSubset : public Error {
 public:
  using Error::Error;
};

class SpecMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised when a search exhausts its node or length budget. Never means "no
/// such word exists".
class ResourceCapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace carsync
