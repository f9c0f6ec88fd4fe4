#pragma once

#include <string>
#include <string_view>

#include "carsync/partial_dfa.hpp"
#include "carsync/types.hpp"

namespace carsync {

class DocumentError : public Error {
 public:
  using Error::Error;
};

/// JSON document {"name", "states", "letters", "delta"} with delta indexed
/// [letter][state] and null for undefined transitions. Output is stable.
std::string to_document(const PartialDfa& dfa);

/// Parses and validates a document. Throws DocumentError on malformed input
/// or structural defects.
PartialDfa from_document(std::string_view text);

/// Graphviz digraph: one node per state, one edge per defined transition
/// labelled with the letter name.
std::string to_dot(const PartialDfa& dfa);

}  // namespace carsync
