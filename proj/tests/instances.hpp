#pragma once

#include <vector>

#include "carsync/constructions.hpp"

namespace carsync::testing {

/// Every builder output at small parameters, both variants.
inline std::vector<ConstructionSpec> small_specs() {
  std::vector<ConstructionSpec> specs;
  for (unsigned k = 1; k <= 3; ++k) {
    specs.push_back({Family::Linear, k, 3, Variant::Literal});
    specs.push_back({Family::Panteleev, k, 2, Variant::Literal});
    for (unsigned b = 2; b <= 4; ++b) {
      for (Variant v : {Variant::Literal, Variant::Repaired}) {
        specs.push_back({Family::ConstAlphabet, k, b, v});
        specs.push_back({Family::Binary, k, b, v});
        specs.push_back({Family::DiameterBinary, k, b, v});
      }
    }
  }
  return specs;
}

}  // namespace carsync::testing
