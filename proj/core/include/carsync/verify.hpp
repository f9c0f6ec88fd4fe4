#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "carsync/constructions.hpp"
#include "carsync/solvers.hpp"

namespace carsync {

struct NotFound {
  friend bool operator==(NotFound, NotFound) = default;
};
struct Capped {
  friend bool operator==(Capped, Capped) = default;
};
using Measured = std::variant<std::uint64_t, NotFound, Capped>;

struct VerifyReport {
  ConstructionSpec spec;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t claimed = 0;
  Measured measured = NotFound{};
  /// measured >= claimed (== for Linear); false for NONE and CAP.
  bool pass = false;
  double wall_time = 0.0;
};

/// Builds the instance and measures it: shortest carefully synchronising word
/// for Linear, ConstAlphabet and Binary, depth of the bundled target for
/// DiameterBinary and Panteleev.
VerifyReport verify_instance(const ConstructionSpec& spec,
                             const SearchLimits& limits = {});

/// Column header and one row in the table printed by the CLI.
std::string verify_header(bool with_time);
std::string verify_row(const VerifyReport& report, bool with_time);

}  // namespace carsync
