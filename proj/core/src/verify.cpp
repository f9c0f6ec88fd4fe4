#include "carsync/verify.hpp"

#include <chrono>
#include <cstdio>

namespace carsync {

VerifyReport verify_instance(const ConstructionSpec& spec,
                             const SearchLimits& limits) {
  VerifyReport report;
  report.spec = spec;
  report.claimed = claimed_bound(spec);

  const auto started = std::chrono::steady_clock::now();
  const Construction built = build(spec);
  report.n = built.dfa.num_states();
  report.m = built.dfa.num_letters();
  try {
    const auto result = built.target ? depth_of(built.dfa, *built.target, limits)
                                     : shortest_careful_sync(built.dfa, limits);
    if (result) {
      report.measured = std::uint64_t{result->length};
    } else {
      report.measured = NotFound{};
    }
  } catch (const ResourceCapExceeded&) {
    report.measured = Capped{};
  }
  report.wall_time = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - started)
                         .count();

  if (const auto* value = std::get_if<std::uint64_t>(&report.measured)) {
    report.pass = spec.family == Family::Linear ? *value == report.claimed
                                                : *value >= report.claimed;
  }
  return report;
}

std::string verify_header(bool with_time) {
  std::string out = "family           k  base  variant   n   m      claimed     measured  result";
  if (with_time) out += "  seconds";
  return out;
}

std::string verify_row(const VerifyReport& r, bool with_time) {
  const bool has_base =
      r.spec.family != Family::Linear && r.spec.family != Family::Panteleev;
  const std::string base = has_base ? std::to_string(r.spec.base) : "-";
  const std::string variant =
      has_base ? std::string(to_string(r.spec.variant)) : "-";
  std::string measured;
  if (const auto* v = std::get_if<std::uint64_t>(&r.measured)) {
    measured = std::to_string(*v);
  } else if (std::holds_alternative<NotFound>(r.measured)) {
    measured = "NONE";
  } else {
    measured = "CAP";
  }

  char buf[256];
  std::snprintf(buf, sizeof buf, "%-15s %2u  %4s  %-8s %3zu %3zu %12llu %12s  %s",
                std::string(to_string(r.spec.family)).c_str(), r.spec.k,
                base.c_str(), variant.c_str(), r.n, r.m,
                static_cast<unsigned long long>(r.claimed), measured.c_str(),
                r.pass ? "PASS" : "FAIL");
  std::string out = buf;
  if (with_time) {
    std::snprintf(buf, sizeof buf, "  %7.3f", r.wall_time);
    out += buf;
  }
  return out;
}

}  // namespace carsync
