#include "carsync/landau.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace carsync {

namespace {

std::vector<unsigned> primes_up_to(unsigned n) {
  std::vector<bool> composite(n + 1, false);
  std::vector<unsigned> primes;
  for (unsigned p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (std::uint64_t q = std::uint64_t{p} * p; q <= n; q += p) {
      composite[q] = true;
    }
  }
  return primes;
}

struct LandauTable {
  BigInt value;
  CycleType cycles;
};

// Knapsack over primes: best[m] is the largest product of prime powers from
// the primes seen so far with total length at most m. choice[i][m] records
// the exponent of the prime power picked for primes[i] at budget m (0 = none).
LandauTable solve(unsigned n) {
  const auto primes = primes_up_to(n);
  std::vector<BigInt> best(n + 1, BigInt(1));
  std::vector<std::vector<std::uint8_t>> choice(primes.size());

  for (std::size_t i = 0; i < primes.size(); ++i) {
    const unsigned p = primes[i];
    choice[i].assign(n + 1, 0);
    for (unsigned m = n; m >= p; --m) {
      std::uint8_t exponent = 1;
      for (std::uint64_t power = p; power <= m; power *= p, ++exponent) {
        BigInt candidate = best[m - power] * power;
        if (candidate > best[m]) {
          best[m] = std::move(candidate);
          choice[i][m] = exponent;
        }
      }
    }
  }

  LandauTable out{best[n], {}};
  unsigned budget = n;
  for (std::size_t i = primes.size(); i-- > 0;) {
    std::uint64_t power = 1;
    for (std::uint8_t e = 0; e < choice[i][budget]; ++e) power *= primes[i];
    if (power != 1) {
      out.cycles.push_back(power);
      budget -= static_cast<unsigned>(power);
    }
  }
  std::sort(out.cycles.begin(), out.cycles.end());
  return out;
}

}  // namespace

BigInt landau(unsigned n) { return solve(n).value; }

CycleType landau_cycle_type(unsigned n) { return solve(n).cycles; }

Permutation::Permutation(std::vector<StateId> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (StateId v : image_) {
    if (v >= image_.size() || hit[v]) {
      throw std::invalid_argument("not a permutation of {0, ..., " +
                                  std::to_string(image_.size()) + "-1}");
    }
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<StateId> image(n);
  std::iota(image.begin(), image.end(), StateId{0});
  return Permutation(std::move(image));
}

std::vector<std::uint64_t> Permutation::cycle_lengths() const {
  std::vector<std::uint64_t> lengths;
  std::vector<bool> seen(size(), false);
  for (StateId start = 0; start < size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (StateId q = start; !seen[q]; q = image_[q]) {
      seen[q] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

BigInt order(const Permutation& p) {
  BigInt result = 1;
  for (std::uint64_t len : p.cycle_lengths()) {
    result = boost::multiprecision::lcm(result, BigInt(len));
  }
  return result;
}

Permutation max_order_permutation(unsigned n) {
  std::vector<StateId> image(n);
  std::iota(image.begin(), image.end(), StateId{0});
  StateId start = 0;
  for (std::uint64_t len : landau_cycle_type(n)) {
    for (std::uint64_t i = 0; i < len; ++i) {
      image[start + i] = static_cast<StateId>(start + (i + 1) % len);
    }
    start += static_cast<StateId>(len);
  }
  return Permutation(std::move(image));
}

Permutation permutation_power(const Permutation& p, std::uint64_t e) {
  // Walk each cycle once and shift every point by e mod its cycle length.
  const auto n = p.size();
  std::vector<StateId> image(n);
  std::vector<bool> seen(n, false);
  std::vector<StateId> cycle;
  for (StateId start = 0; start < n; ++start) {
    if (seen[start]) continue;
    cycle.clear();
    for (StateId q = start; !seen[q]; q = p(q)) {
      seen[q] = true;
      cycle.push_back(q);
    }
    const std::size_t shift = static_cast<std::size_t>(e % cycle.size());
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      image[cycle[i]] = cycle[(i + shift) % cycle.size()];
    }
  }
  return Permutation(std::move(image));
}

}  // namespace carsync
