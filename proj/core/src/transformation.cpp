#include "carsync/transformation.hpp"

#include <algorithm>
#include <string>

namespace carsync {

PartialTransformation::PartialTransformation(std::vector<StateId> image)
    : image_(std::move(image)) {
  const auto n = image_.size();
  for (StateId v : image_) {
    if (v != kUndefined && v >= n) {
      throw InvalidState("transformation image " + std::to_string(v) +
                         " out of range for size " + std::to_string(n));
    }
  }
}

PartialTransformation PartialTransformation::identity(std::size_t n) {
  std::vector<StateId> image(n);
  for (std::size_t q = 0; q < n; ++q) image[q] = static_cast<StateId>(q);
  return PartialTransformation(std::move(image));
}

PartialTransformation PartialTransformation::constant(std::size_t n,
                                                      StateId target) {
  return PartialTransformation(std::vector<StateId>(n, target));
}

bool PartialTransformation::is_total() const {
  return std::none_of(image_.begin(), image_.end(),
                      [](StateId v) { return v == kUndefined; });
}

bool PartialTransformation::is_constant() const {
  if (image_.empty() || !is_total()) return false;
  return std::all_of(image_.begin(), image_.end(),
                     [&](StateId v) { return v == image_.front(); });
}

PartialTransformation compose(const PartialTransformation& f,
                              const PartialTransformation& g) {
  if (f.size() != g.size()) {
    throw DomainMismatch("cannot compose transformations of sizes " +
                         std::to_string(f.size()) + " and " +
                         std::to_string(g.size()));
  }
  std::vector<StateId> image(f.size());
  for (std::size_t q = 0; q < f.size(); ++q) {
    const StateId mid = f.image()[q];
    image[q] = mid == kUndefined ? kUndefined : g.image()[mid];
  }
  return PartialTransformation(std::move(image));
}

}  // namespace carsync

std::size_t std::hash<carsync::PartialTransformation>::operator()(
    const carsync::PartialTransformation& f) const noexcept {
  // FNV-1a over the image entries.
  std::size_t h = 1469598103934665603ULL;
  for (carsync::StateId v : f.image()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return h;
}
