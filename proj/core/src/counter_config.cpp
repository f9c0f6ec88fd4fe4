#include "carsync/counter_config.hpp"

#include <map>
#include <sstream>

namespace carsync {

namespace {

enum class Role { Chain, Parking, Transit, P, B };

struct Slot {
  Role role;
  unsigned digit = 0;     // chain digit or parking index
  unsigned position = 0;  // chain, P or B position
};

std::vector<Slot> slots_of(const CounterLayout& lay) {
  std::vector<Slot> slots(lay.num_states());
  for (unsigned i = 1; i <= lay.k(); ++i) {
    for (unsigned j = 0; j < lay.base(); ++j) {
      slots[lay.chain(j, i)] = {Role::Chain, j, i};
    }
  }
  if (lay.spec().family == Family::Linear) return slots;
  for (unsigned j = 0; j < lay.base(); ++j) {
    slots[lay.parking(j)] = {Role::Parking, j, 0};
  }
  if (lay.has_transit()) slots[lay.transit()] = {Role::Transit, 0, 0};
  for (unsigned i = 1; i <= lay.k(); ++i) slots[lay.p(i)] = {Role::P, 0, i};
  if (lay.has_reset_chain()) {
    for (unsigned i = 1; i <= lay.k(); ++i) slots[lay.b(i)] = {Role::B, 0, i};
  }
  return slots;
}

template <typename T>
std::string join(const std::vector<T>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out << ',';
    out << values[i];
  }
  return out.str();
}

std::string describe_detail(const ShiftDetail& d) {
  std::ostringstream out;
  out << "offset=" << d.offset << " digits=[" << join(d.digits) << "]";
  if (d.parked) out << " parked=" << *d.parked;
  if (d.transit) out << " transit";
  if (d.resurrect) out << " resurrect";
  out << " P=[" << join(d.p_positions) << "]";
  return out.str();
}

}  // namespace

CounterConfig decode_config(const ConstructionSpec& spec, StateSet s) {
  if (!is_counter_family(spec.family)) {
    throw SpecMismatch("decode_config needs a counter family, got " +
                       std::string(to_string(spec.family)));
  }
  const CounterLayout lay(spec);
  if (lay.num_states() < kMaxStates &&
      (s.bits() >> lay.num_states()) != 0) {
    throw InvalidState("state set has members outside the automaton");
  }
  if (s.empty()) return Invalid{"no active states"};

  const auto slots = slots_of(lay);
  std::map<unsigned, unsigned> chain;  // position -> digit
  std::vector<unsigned> parked;
  std::vector<unsigned> p_positions;
  std::vector<unsigned> b_positions;
  bool transit = false;
  bool resurrect = false;
  std::string clash;

  s.for_each([&](StateId q) {
    const Slot& slot = slots[q];
    switch (slot.role) {
      case Role::Chain:
        if (!chain.emplace(slot.position, slot.digit).second) {
          clash = "two digit states active at position " +
                  std::to_string(slot.position);
        }
        break;
      case Role::Parking:
        if (slot.digit + 1 == lay.base()) {
          resurrect = true;
        } else {
          parked.push_back(slot.digit);
        }
        break;
      case Role::Transit:
        transit = true;
        break;
      case Role::P:
        p_positions.push_back(slot.position);
        break;
      case Role::B:
        b_positions.push_back(slot.position);
        break;
    }
  });

  if (!clash.empty()) return Invalid{clash};
  if (!b_positions.empty()) {
    if (b_positions.size() != s.size()) {
      return Invalid{"reset chain B active together with other states"};
    }
    return Reset{b_positions};
  }
  if (p_positions.size() == s.size()) return Drained{p_positions};

  if (chain.size() == s.size() && chain.size() == lay.k()) {
    Counting counting;
    for (const auto& [pos, digit] : chain) counting.digits.push_back(digit);
    return counting;
  }
  if (spec.family == Family::Linear) {
    return Invalid{"not exactly one digit state per position"};
  }
  if (parked.size() > 1) return Invalid{"several parked digits"};

  ShiftDetail detail;
  detail.offset = lay.k() - static_cast<unsigned>(chain.size());
  unsigned expected = detail.offset + 1;
  for (const auto& [pos, digit] : chain) {
    if (pos != expected++) {
      return Invalid{"digit positions are not a contiguous block ending at k"};
    }
    detail.digits.push_back(digit);
  }
  if (!parked.empty()) detail.parked = parked.front();
  detail.transit = transit;
  detail.resurrect = resurrect;
  detail.p_positions = p_positions;

  if (resurrect) return ShiftingLeft{detail};
  return ShiftingRight{detail};
}

StateSet encode_counting(const ConstructionSpec& spec,
                         const std::vector<unsigned>& digits) {
  const CounterLayout lay(spec);
  if (digits.size() != lay.k()) {
    throw std::invalid_argument("expected " + std::to_string(lay.k()) +
                                " digits");
  }
  StateSet s;
  for (unsigned i = 1; i <= lay.k(); ++i) {
    const unsigned d = digits[i - 1];
    if (d >= lay.base()) {
      throw std::invalid_argument("digit " + std::to_string(d) +
                                  " not below base " +
                                  std::to_string(lay.base()));
    }
    s.insert(lay.chain(d, i));
  }
  return s;
}

std::vector<unsigned> to_digits(const ConstructionSpec& spec,
                                std::uint64_t value) {
  const CounterLayout lay(spec);
  std::vector<unsigned> digits(lay.k());
  for (unsigned i = lay.k(); i-- > 0;) {
    digits[i] = static_cast<unsigned>(value % lay.base());
    value /= lay.base();
  }
  if (value != 0) throw std::invalid_argument("value needs more than k digits");
  return digits;
}

std::string describe(const CounterConfig& config) {
  struct Visitor {
    std::string operator()(const Counting& c) const {
      return "Counting[" + join(c.digits) + "]";
    }
    std::string operator()(const ShiftingRight& s) const {
      return "ShiftingRight(" + describe_detail(s.detail) + ")";
    }
    std::string operator()(const ShiftingLeft& s) const {
      return "ShiftingLeft(" + describe_detail(s.detail) + ")";
    }
    std::string operator()(const Drained& d) const {
      return "Drained[" + join(d.positions) + "]";
    }
    std::string operator()(const Reset& r) const {
      return "Reset[" + join(r.positions) + "]";
    }
    std::string operator()(const Invalid& i) const {
      return "Invalid(" + i.reason + ")";
    }
  };
  return std::visit(Visitor{}, config);
}

}  // namespace carsync
