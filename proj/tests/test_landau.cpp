#include <doctest.h>

#include <numeric>

#include "carsync/landau.hpp"
#include "oracles.hpp"

using namespace carsync;

TEST_CASE("landau examples") {
  CHECK(landau(0) == 1);
  CHECK(landau(1) == 1);
  CHECK(landau(5) == 6);
  CHECK(landau(7) == 12);
  CHECK(landau(19) == 420);
  CHECK(landau_cycle_type(5) == CycleType{2, 3});
  CHECK(landau_cycle_type(7) == CycleType{3, 4});
  CHECK(landau_cycle_type(1).empty());
}

TEST_CASE("landau beyond 64 bits") {
  const BigInt g = landau(1000);
  CHECK(g > BigInt(std::numeric_limits<std::uint64_t>::max()));
  // The cycle type always certifies the value.
  BigInt l = 1;
  std::uint64_t sum = 0;
  for (auto c : landau_cycle_type(1000)) {
    l = boost::multiprecision::lcm(l, BigInt(c));
    sum += c;
  }
  CHECK(l == g);
  CHECK(sum <= 1000);
}

TEST_CASE("property: landau matches the partition oracle") {
  for (unsigned n = 0; n <= 30; ++n) {
    CAPTURE(n);
    const BigInt g = landau(n);
    CHECK(g == testing::partition_lcm_max(n));
    CHECK(order(max_order_permutation(n)) == g);
    if (n > 0) CHECK(landau(n - 1) <= g);
    std::uint64_t sum = 0;
    for (auto c : landau_cycle_type(n)) sum += c;
    CHECK(sum <= n);
  }
}

TEST_CASE("Permutation") {
  CHECK_THROWS_AS(Permutation({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 2}), std::invalid_argument);
  CHECK(Permutation::identity(3).cycle_lengths() ==
        std::vector<std::uint64_t>{1, 1, 1});
  CHECK(order(Permutation::identity(0)) == 1);
  CHECK(order(Permutation({1, 2, 0, 4, 3})) == 6);
}

TEST_CASE("max_order_permutation layout") {
  const Permutation p5 = max_order_permutation(5);
  CHECK(p5 == Permutation({1, 0, 3, 4, 2}));
  CHECK(max_order_permutation(2) == Permutation({1, 0}));
  CHECK(max_order_permutation(1) == Permutation::identity(1));
}

TEST_CASE("permutation_power") {
  for (unsigned n = 1; n <= 12; ++n) {
    const Permutation p = max_order_permutation(n);
    const auto g = static_cast<std::uint64_t>(order(p));
    CHECK(permutation_power(p, 0) == Permutation::identity(n));
    CHECK(permutation_power(p, 1) == p);
    CHECK(permutation_power(p, g) == Permutation::identity(n));
    // p^(g-1) is the inverse.
    const Permutation inv = permutation_power(p, g - 1);
    for (StateId i = 0; i < n; ++i) CHECK(inv(p(i)) == i);
    // Powers compose additively.
    const Permutation a = permutation_power(p, 3);
    const Permutation b = permutation_power(p, 5);
    const Permutation ab = permutation_power(p, 8);
    for (StateId i = 0; i < n; ++i) CHECK(b(a(i)) == ab(i));
  }
}
