#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "carsync/partial_dfa.hpp"
#include "carsync/state_set.hpp"
#include "carsync/transformation.hpp"

namespace carsync {

enum class Family { Linear, ConstAlphabet, Binary, DiameterBinary, Panteleev };

/// Literal has no transit state; Repaired adds
/// the transit state lz on the path from the last zero-chain state into P.
enum class Variant { Literal, Repaired };

struct ConstructionSpec {
  Family family = Family::Linear;
  unsigned k = 1;
  unsigned base = 3;
  Variant variant = Variant::Repaired;

  friend bool operator==(const ConstructionSpec&,
                         const ConstructionSpec&) = default;
};

std::string_view to_string(Family f);
std::string_view to_string(Variant v);
std::optional<Family> parse_family(std::string_view text);
std::optional<Variant> parse_variant(std::string_view text);

/// Throws std::invalid_argument if k or base are out of range.
void check_spec(const ConstructionSpec& spec);

/// True for the families whose active sets encode a counter.
bool is_counter_family(Family f);

struct ConstantTo {
  StateId state = 0;
  friend bool operator==(const ConstantTo&, const ConstantTo&) = default;
};
struct ExactTransformation {
  PartialTransformation f;
  friend bool operator==(const ExactTransformation&,
                         const ExactTransformation&) = default;
};
/// Any word defined on all of source and mapping it onto target.
struct SubsetToState {
  StateSet source;
  StateId target = 0;
  friend bool operator==(const SubsetToState&, const SubsetToState&) = default;
};
using TargetSpec = std::variant<ConstantTo, ExactTransformation, SubsetToState>;

struct Construction {
  PartialDfa dfa;
  std::optional<TargetSpec> target;
};

/// 3k states z_i, n_i, t_i and letters c, a_1..a_k, y.
PartialDfa build_linear(unsigned k);

/// Base-b counter over letters {c, d, r}; (b+1)k + b states, plus lz when
/// Repaired.
PartialDfa build_const_alphabet(unsigned k, unsigned base, Variant variant);

/// The {d, r} variant with the reset chain b_1..b_k; (b+2)k + b states, plus
/// lz when Repaired.
PartialDfa build_binary(unsigned k, unsigned base, Variant variant);

/// build_const_alphabet without c, bundled with the target "top digit chain
/// onto p_k".
Construction build_diameter_binary(unsigned k, unsigned base, Variant variant);

/// 2k states named 1..2k, letters c, one x per non-last k-subset and y,
/// bundled with the exact transformation f whose depth the family bounds.
Construction build_panteleev(unsigned k);

/// Dispatches on spec.family.
Construction build(const ConstructionSpec& spec);

/// Closed-form lower bound claimed for the family. Throws std::overflow_error
/// if the value does not fit in 64 bits.
std::uint64_t claimed_bound(const ConstructionSpec& spec);

/// State index lookup for the counter families. Positions are 1-based as in
/// the naming scheme; digit j ranges over [0, base).
class CounterLayout {
 public:
  explicit CounterLayout(const ConstructionSpec& spec);

  const ConstructionSpec& spec() const { return spec_; }
  unsigned k() const { return spec_.k; }
  unsigned base() const { return base_; }
  bool has_transit() const { return has_transit_; }
  bool has_reset_chain() const { return has_reset_chain_; }
  std::size_t num_states() const;

  StateId chain(unsigned digit, unsigned position) const;
  StateId parking(unsigned digit) const;
  StateId transit() const;
  StateId p(unsigned position) const;
  StateId b(unsigned position) const;

  std::string chain_name(unsigned digit, unsigned position) const;

 private:
  ConstructionSpec spec_;
  unsigned base_;
  bool has_l_and_p_;
  bool has_transit_;
  bool has_reset_chain_;
};

}  // namespace carsync
