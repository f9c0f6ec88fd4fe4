#include "carsync/constructions.hpp"

#include <stdexcept>
#include <string>

#include "carsync/k_subset.hpp"
#include "carsync/landau.hpp"

namespace carsync {

namespace {

constexpr std::uint64_t kMaxPanteleevLetters = 1'000'000;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("bound does not fit in 64 bits");
  }
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned e) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < e; ++i) out = checked_mul(out, base);
  return out;
}

std::uint64_t central_binomial(unsigned k) {
  // C(2k, k) built incrementally; every prefix product is itself a binomial.
  std::uint64_t c = 1;
  for (unsigned i = 1; i <= k; ++i) {
    c = checked_mul(c, k + i) / i;
  }
  return c;
}

using Row = std::vector<StateId>;

struct CounterRows {
  Row c;
  Row d;
  Row r;
};

// Transitions shared by the const-alphabet, binary and diameter families.
CounterRows counter_rows(const CounterLayout& lay) {
  const auto n = lay.num_states();
  const unsigned k = lay.k();
  const unsigned base = lay.base();
  const unsigned top = base - 1;
  const bool repaired = lay.has_transit();
  CounterRows rows{Row(n, kUndefined), Row(n, kUndefined), Row(n, kUndefined)};

  for (unsigned i = 1; i <= k; ++i) {
    for (unsigned j = 0; j < base; ++j) {
      const StateId s = lay.chain(j, i);
      rows.c[s] = lay.chain(top, i);
      if (i < k) {
        rows.d[s] = lay.chain(j, i + 1);
      } else if (j >= 1) {
        rows.d[s] = lay.parking(j - 1);
      } else {
        rows.d[s] = repaired ? lay.transit() : lay.p(1);
      }
      if (i >= 2) rows.r[s] = lay.chain(j, i - 1);
    }
  }
  for (unsigned j = 0; j < base; ++j) {
    rows.c[lay.parking(j)] = lay.chain(top, 1);
    rows.r[lay.parking(j)] = lay.chain(j, k);
  }
  if (repaired) {
    rows.c[lay.transit()] = lay.chain(top, 1);
    rows.d[lay.transit()] = lay.p(1);
  }
  for (unsigned i = 1; i <= k; ++i) {
    rows.c[lay.p(i)] = i < k ? lay.chain(top, i + 1) : lay.chain(top, 1);
    rows.d[lay.p(i)] = lay.p(i < k ? i + 1 : k);
    rows.r[lay.p(i)] = i >= 2 ? lay.p(i - 1) : lay.parking(top);
  }
  return rows;
}

std::vector<std::string> counter_state_names(const CounterLayout& lay) {
  std::vector<std::string> names(lay.num_states());
  for (unsigned i = 1; i <= lay.k(); ++i) {
    for (unsigned j = 0; j < lay.base(); ++j) {
      names[lay.chain(j, i)] = lay.chain_name(j, i);
    }
  }
  if (lay.spec().family == Family::Linear) return names;
  for (unsigned j = 0; j < lay.base(); ++j) {
    names[lay.parking(j)] = "l" + std::to_string(j);
  }
  if (lay.has_transit()) names[lay.transit()] = "lz";
  for (unsigned i = 1; i <= lay.k(); ++i) {
    names[lay.p(i)] = "p" + std::to_string(i);
  }
  if (lay.has_reset_chain()) {
    for (unsigned i = 1; i <= lay.k(); ++i) {
      names[lay.b(i)] = "b" + std::to_string(i);
    }
  }
  return names;
}

std::string instance_name(const ConstructionSpec& spec) {
  std::string name = std::string(to_string(spec.family)) + "-k" +
                     std::to_string(spec.k);
  if (spec.family != Family::Linear && spec.family != Family::Panteleev) {
    name += "-b" + std::to_string(spec.base) + "-" +
            std::string(to_string(spec.variant));
  }
  return name;
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Linear:
      return "linear";
    case Family::ConstAlphabet:
      return "const";
    case Family::Binary:
      return "binary";
    case Family::DiameterBinary:
      return "diameter-binary";
    case Family::Panteleev:
      return "panteleev";
  }
  return "?";
}

std::string_view to_string(Variant v) {
  return v == Variant::Literal ? "literal" : "repaired";
}

std::optional<Family> parse_family(std::string_view text) {
  for (Family f : {Family::Linear, Family::ConstAlphabet, Family::Binary,
                   Family::DiameterBinary, Family::Panteleev}) {
    if (text == to_string(f)) return f;
  }
  return std::nullopt;
}

std::optional<Variant> parse_variant(std::string_view text) {
  if (text == "literal") return Variant::Literal;
  if (text == "repaired") return Variant::Repaired;
  return std::nullopt;
}

bool is_counter_family(Family f) { return f != Family::Panteleev; }

void check_spec(const ConstructionSpec& spec) {
  if (spec.k < 1) throw std::invalid_argument("k must be at least 1");
  if (spec.family == Family::Panteleev) {
    if (spec.k > 32 || central_binomial(spec.k) > kMaxPanteleevLetters) {
      throw std::invalid_argument("panteleev k=" + std::to_string(spec.k) +
                                  " needs too many letters");
    }
    return;
  }
  if (spec.family != Family::Linear && spec.base < 2) {
    throw std::invalid_argument("base must be at least 2");
  }
  if (spec.k > kMaxStates || spec.base > kMaxStates ||
      CounterLayout(spec).num_states() > kMaxStates) {
    throw std::invalid_argument("instance exceeds the 64-state limit");
  }
}

CounterLayout::CounterLayout(const ConstructionSpec& spec)
    : spec_(spec),
      base_(spec.family == Family::Linear ? 3 : spec.base),
      has_l_and_p_(spec.family != Family::Linear),
      has_transit_(has_l_and_p_ && spec.variant == Variant::Repaired),
      has_reset_chain_(spec.family == Family::Binary) {
  if (!is_counter_family(spec.family)) {
    throw SpecMismatch("panteleev automata carry no counter layout");
  }
}

std::size_t CounterLayout::num_states() const {
  std::size_t n = std::size_t{k()} * base_;
  if (has_l_and_p_) n += base_ + k() + (has_transit_ ? 1 : 0);
  if (has_reset_chain_) n += k();
  return n;
}

StateId CounterLayout::chain(unsigned digit, unsigned position) const {
  return static_cast<StateId>((position - 1) * base_ + digit);
}

StateId CounterLayout::parking(unsigned digit) const {
  return static_cast<StateId>(k() * base_ + digit);
}

StateId CounterLayout::transit() const {
  return static_cast<StateId>(k() * base_ + base_);
}

StateId CounterLayout::p(unsigned position) const {
  return static_cast<StateId>(k() * base_ + base_ + (has_transit_ ? 1 : 0) +
                              position - 1);
}

StateId CounterLayout::b(unsigned position) const {
  return static_cast<StateId>(p(k()) + position);
}

std::string CounterLayout::chain_name(unsigned digit,
                                      unsigned position) const {
  if (base_ == 3) {
    static constexpr char kLetters[] = {'z', 'n', 't'};
    return kLetters[digit] + std::to_string(position);
  }
  return "c" + std::to_string(digit) + "_" + std::to_string(position);
}

PartialDfa build_linear(unsigned k) {
  const ConstructionSpec spec{Family::Linear, k, 3, Variant::Literal};
  check_spec(spec);
  const CounterLayout lay(spec);
  const auto n = lay.num_states();
  constexpr unsigned z = 0, one = 1, two = 2;

  std::vector<std::string> letters{"c"};
  std::vector<Row> delta;

  Row c(n);
  for (unsigned i = 1; i <= k; ++i) {
    for (unsigned j = 0; j < 3; ++j) c[lay.chain(j, i)] = lay.chain(two, i);
  }
  delta.push_back(std::move(c));

  for (unsigned a = 1; a <= k; ++a) {
    Row row(n, kUndefined);
    for (unsigned j = 1; j <= k; ++j) {
      if (j < a) {
        for (unsigned d = 0; d < 3; ++d) row[lay.chain(d, j)] = lay.chain(d, j);
      } else if (j == a) {
        row[lay.chain(two, j)] = lay.chain(one, j);
        row[lay.chain(one, j)] = lay.chain(z, j);
      } else {
        row[lay.chain(z, j)] = lay.chain(two, j);
      }
    }
    letters.push_back("a" + std::to_string(a));
    delta.push_back(std::move(row));
  }

  Row y(n, kUndefined);
  for (unsigned j = 1; j <= k; ++j) y[lay.chain(z, j)] = lay.chain(z, k);
  letters.emplace_back("y");
  delta.push_back(std::move(y));

  return PartialDfa(instance_name(spec), counter_state_names(lay),
                    std::move(letters), std::move(delta));
}

PartialDfa build_const_alphabet(unsigned k, unsigned base, Variant variant) {
  const ConstructionSpec spec{Family::ConstAlphabet, k, base, variant};
  check_spec(spec);
  const CounterLayout lay(spec);
  auto rows = counter_rows(lay);
  return PartialDfa(instance_name(spec), counter_state_names(lay),
                    {"c", "d", "r"},
                    {std::move(rows.c), std::move(rows.d), std::move(rows.r)});
}

PartialDfa build_binary(unsigned k, unsigned base, Variant variant) {
  const ConstructionSpec spec{Family::Binary, k, base, variant};
  check_spec(spec);
  const CounterLayout lay(spec);
  auto rows = counter_rows(lay);
  const unsigned top = base - 1;

  for (unsigned i = 1; i <= k; ++i) {
    rows.d[lay.b(i)] = i < k ? lay.b(i + 1) : lay.chain(top, 1);
    rows.r[lay.b(i)] = i >= 2 ? lay.b(i - 1) : lay.b(k);
  }
  for (unsigned j = 0; j < base; ++j) rows.r[lay.chain(j, 1)] = lay.b(k);
  if (variant == Variant::Literal) {
    rows.r[lay.p(1)] = lay.chain(top, k);
  } else {
    // Without this the first forced r would kill lz, so nothing synchronises.
    rows.r[lay.transit()] = lay.chain(top, k);
  }
  return PartialDfa(instance_name(spec), counter_state_names(lay), {"d", "r"},
                    {std::move(rows.d), std::move(rows.r)});
}

Construction build_diameter_binary(unsigned k, unsigned base,
                                   Variant variant) {
  const ConstructionSpec spec{Family::DiameterBinary, k, base, variant};
  check_spec(spec);
  const CounterLayout lay(spec);
  auto rows = counter_rows(lay);

  SubsetToState target;
  for (unsigned i = 1; i <= k; ++i) target.source.insert(lay.chain(base - 1, i));
  target.target = lay.p(k);

  return {PartialDfa(instance_name(spec), counter_state_names(lay), {"d", "r"},
                     {std::move(rows.d), std::move(rows.r)}),
          TargetSpec{target}};
}

Construction build_panteleev(unsigned k) {
  const ConstructionSpec spec{Family::Panteleev, k, 2, Variant::Literal};
  check_spec(spec);
  const std::size_t n = 2 * std::size_t{k};

  std::vector<std::string> states;
  for (std::size_t q = 1; q <= n; ++q) states.push_back(std::to_string(q));

  std::vector<std::string> letters;
  std::vector<Row> delta;

  Row c(n);
  for (StateId i = 0; i < k; ++i) {
    c[i] = i;
    c[i + k] = i;
  }
  letters.emplace_back("c");
  delta.push_back(std::move(c));

  // One letter per non-last subset, mapping it order-preservingly onto its
  // successor and killing everything else.
  const auto subsets = all_k_subsets(k);
  for (std::size_t s = 0; s + 1 < subsets.size(); ++s) {
    const auto& from = subsets[s].members;
    const auto& to = subsets[s + 1].members;
    Row row(n, kUndefined);
    std::string name = "x";
    for (std::size_t i = 0; i < from.size(); ++i) {
      row[from[i] - 1] = to[i] - 1;
      if (i != 0) name += '_';
      name += std::to_string(from[i]);
    }
    letters.push_back(std::move(name));
    delta.push_back(std::move(row));
  }

  const Permutation gamma = max_order_permutation(k);
  Row y(n, kUndefined);
  for (StateId i = 0; i < k; ++i) y[i + k] = gamma(i);
  letters.emplace_back("y");
  delta.push_back(std::move(y));

  const auto g = static_cast<std::uint64_t>(order(gamma));
  const Permutation shift = permutation_power(gamma, g - 1);
  std::vector<StateId> image(n);
  for (StateId i = 0; i < k; ++i) {
    image[i] = k + shift(i);
    image[i + k] = image[i];
  }

  return {PartialDfa(instance_name(spec), std::move(states),
                     std::move(letters), std::move(delta)),
          TargetSpec{ExactTransformation{PartialTransformation(image)}}};
}

Construction build(const ConstructionSpec& spec) {
  switch (spec.family) {
    case Family::Linear:
      return {build_linear(spec.k), std::nullopt};
    case Family::ConstAlphabet:
      return {build_const_alphabet(spec.k, spec.base, spec.variant),
              std::nullopt};
    case Family::Binary:
      return {build_binary(spec.k, spec.base, spec.variant), std::nullopt};
    case Family::DiameterBinary:
      return build_diameter_binary(spec.k, spec.base, spec.variant);
    case Family::Panteleev:
      return build_panteleev(spec.k);
  }
  throw std::invalid_argument("unknown family");
}

std::uint64_t claimed_bound(const ConstructionSpec& spec) {
  check_spec(spec);
  switch (spec.family) {
    case Family::Linear:
      return checked_pow(3, spec.k) + 1;
    case Family::ConstAlphabet:
    case Family::Binary:
    case Family::DiameterBinary:
      return checked_pow(spec.base, spec.k);
    case Family::Panteleev: {
      const BigInt g = landau(spec.k);
      if (g > std::numeric_limits<std::uint64_t>::max()) {
        throw std::overflow_error("bound does not fit in 64 bits");
      }
      return checked_mul(central_binomial(spec.k),
                         static_cast<std::uint64_t>(g));
    }
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace carsync
