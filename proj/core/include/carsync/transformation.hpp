#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "carsync/types.hpp"

namespace carsync {

/// A partial map on {0, ..., n-1}; entries equal to kUndefined are undefined.
class PartialTransformation {
 public:
  PartialTransformation() = default;
  explicit PartialTransformation(std::vector<StateId> image);

  static PartialTransformation identity(std::size_t n);
  static PartialTransformation constant(std::size_t n, StateId target);

  std::size_t size() const { return image_.size(); }
  StateId operator()(StateId q) const { return image_.at(q); }
  std::span<const StateId> image() const { return image_; }

  bool is_total() const;
  /// Total and all images equal.
  bool is_constant() const;

  friend bool operator==(const PartialTransformation&,
                         const PartialTransformation&) = default;

 private:
  std::vector<StateId> image_;
};

/// "Apply f, then g": result(q) = g(f(q)), undefined if either stage is.
/// Throws DomainMismatch when the sizes differ.
PartialTransformation compose(const PartialTransformation& f,
                              const PartialTransformation& g);

}  // namespace carsync

template <>
struct std::hash<carsync::PartialTransformation> {
  std::size_t operator()(const carsync::PartialTransformation& f) const noexcept;
};
