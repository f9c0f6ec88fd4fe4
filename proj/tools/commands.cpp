#include "commands.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>

#include "carsync/constructions.hpp"
#include "carsync/counter_config.hpp"
#include "carsync/io.hpp"
#include "carsync/landau.hpp"
#include "carsync/solvers.hpp"
#include "carsync/verify.hpp"

namespace carsync::cli {

namespace {

constexpr std::size_t kPowersetGuard = 28;
constexpr long long kMaxLandauN = 10'000;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InstanceFlags {
  std::string input;
  std::string family;
  int k = -1;
  unsigned base = 4;
  std::string variant = "repaired";
};

struct LimitFlags {
  std::size_t max_nodes = SearchLimits{}.max_nodes;
  std::size_t max_length = 0;
  bool force = false;

  SearchLimits limits() const {
    SearchLimits l;
    l.max_nodes = max_nodes;
    if (max_length != 0) l.max_length = max_length;
    return l;
  }
};

struct Instance {
  PartialDfa dfa;
  std::optional<TargetSpec> target;
  std::optional<ConstructionSpec> spec;
};

void add_instance_flags(CLI::App* cmd, InstanceFlags& f, bool allow_input) {
  if (allow_input) {
    cmd->add_option("--input", f.input, "Automaton document (JSON)");
  }
  cmd->add_option("--family", f.family,
                  "linear | const | binary | diameter-binary | panteleev");
  cmd->add_option("--k", f.k, "Counter length / subset size k");
  cmd->add_option("--base", f.base, "Counter base b (default 4)");
  cmd->add_option("--variant", f.variant, "literal | repaired (default)");
}

void add_limit_flags(CLI::App* cmd, LimitFlags& f) {
  cmd->add_option("--max-nodes", f.max_nodes, "Search node budget");
  cmd->add_option("--max-length", f.max_length,
                  "Longest word to search (0 = unbounded)");
  cmd->add_flag("--force", f.force, "Lift the desk-scale size guard");
}

ConstructionSpec parse_spec(const InstanceFlags& f, int k) {
  const auto family = parse_family(f.family);
  if (!family) throw UsageError("unknown family '" + f.family + "'");
  const auto variant = parse_variant(f.variant);
  if (!variant) throw UsageError("unknown variant '" + f.variant + "'");
  if (k < 1) throw UsageError("--k must be a positive integer");
  ConstructionSpec spec{*family, static_cast<unsigned>(k), f.base, *variant};
  try {
    check_spec(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return spec;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Instance load_instance(const InstanceFlags& f) {
  if (!f.input.empty()) {
    if (!f.family.empty()) {
      throw UsageError("give either --input or --family, not both");
    }
    try {
      return {from_document(read_file(f.input)), std::nullopt, std::nullopt};
    } catch (const DocumentError& e) {
      throw UsageError(e.what());
    }
  }
  if (f.family.empty()) throw UsageError("need --input or --family");
  const ConstructionSpec spec = parse_spec(f, f.k);
  Construction built = build(spec);
  return {std::move(built.dfa), std::move(built.target), spec};
}

void guard_powerset(const PartialDfa& dfa, const LimitFlags& limits) {
  if (dfa.num_states() > kPowersetGuard && !limits.force) {
    throw UsageError("powerset search on " + std::to_string(dfa.num_states()) +
                     " states exceeds the desk-scale guard of " +
                     std::to_string(kPowersetGuard) + "; pass --force");
  }
}

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '\t') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

StateId state_by_name(const PartialDfa& dfa, const std::string& name) {
  const auto q = dfa.find_state(name);
  if (!q) throw UsageError("unknown state '" + name + "'");
  return *q;
}

/// "q1,q2->p" selects SubsetToState; otherwise a comma-separated image
/// vector of state names with "_" for undefined.
TargetSpec parse_target(const PartialDfa& dfa, std::string_view text) {
  if (const auto arrow = text.find("->"); arrow != std::string_view::npos) {
    SubsetToState target;
    for (const auto& name : split_tokens(text.substr(0, arrow))) {
      target.source.insert(state_by_name(dfa, name));
    }
    const auto rhs = split_tokens(text.substr(arrow + 2));
    if (target.source.empty() || rhs.size() != 1) {
      throw UsageError("subset target must look like 'a,b->c'");
    }
    target.target = state_by_name(dfa, rhs.front());
    return target;
  }
  const auto tokens = split_tokens(text);
  if (tokens.size() != dfa.num_states()) {
    throw UsageError("transformation literal needs " +
                     std::to_string(dfa.num_states()) + " entries, got " +
                     std::to_string(tokens.size()));
  }
  std::vector<StateId> image;
  for (const auto& t : tokens) {
    image.push_back(t == "_" ? kUndefined : state_by_name(dfa, t));
  }
  return ExactTransformation{PartialTransformation(std::move(image))};
}

std::string format_transformation(const PartialDfa& dfa,
                                  const PartialTransformation& f) {
  std::string out;
  for (std::size_t q = 0; q < f.size(); ++q) {
    if (q != 0) out += ',';
    out += f.image()[q] == kUndefined ? "_" : dfa.state_name(f.image()[q]);
  }
  return out;
}

int cmd_generate(const InstanceFlags& inst, const std::string& format,
                 const std::string& out_path, std::ostream& out) {
  if (format != "json" && format != "dot") {
    throw UsageError("unknown format '" + format + "'");
  }
  if (inst.family.empty()) throw UsageError("generate needs --family");
  const Instance instance = load_instance(inst);
  const std::string text =
      format == "json" ? to_document(instance.dfa) : to_dot(instance.dfa);
  if (out_path.empty() || out_path == "-") {
    out << text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + out_path + "'");
    file << text;
  }
  return kOk;
}

int cmd_sync(const InstanceFlags& inst, const LimitFlags& lim,
             std::ostream& out) {
  const Instance instance = load_instance(inst);
  guard_powerset(instance.dfa, lim);
  const auto result = shortest_careful_sync(instance.dfa, lim.limits());
  if (!result) {
    out << "NONE\n";
    return kNegative;
  }
  out << "length=" << result->length << '\n'
      << "witness=" << format_word(instance.dfa, result->witness) << '\n'
      << "state=" << instance.dfa.state_name(result->reached->front()) << '\n'
      << "explored=" << result->explored << '\n';
  return kOk;
}

int cmd_depth(const InstanceFlags& inst, const std::string& target_text,
              const LimitFlags& lim, std::ostream& out) {
  const Instance instance = load_instance(inst);
  TargetSpec target;
  if (!target_text.empty()) {
    target = parse_target(instance.dfa, target_text);
  } else if (instance.target) {
    target = *instance.target;
  } else {
    throw UsageError("no --target given and the instance bundles none");
  }
  if (std::holds_alternative<SubsetToState>(target)) {
    guard_powerset(instance.dfa, lim);
  }
  const auto result = depth_of(instance.dfa, target, lim.limits());
  if (!result) {
    out << "NONE\n";
    return kNegative;
  }
  out << "depth=" << result->length << '\n'
      << "witness=" << format_word(instance.dfa, result->witness) << '\n'
      << "explored=" << result->explored << '\n';
  return kOk;
}

int cmd_diameter(const InstanceFlags& inst, const LimitFlags& lim,
                 std::ostream& out) {
  const Instance instance = load_instance(inst);
  const auto summary = semigroup_summary(instance.dfa, lim.limits());
  out << "diameter=" << summary.diameter << '\n'
      << "elements=" << summary.element_count << '\n'
      << "witness=" << format_word(instance.dfa, summary.witness_word) << '\n'
      << "deepest="
      << format_transformation(instance.dfa, summary.witness_depth_element)
      << '\n';
  return kOk;
}

int cmd_trace(const InstanceFlags& inst, const std::string& word_text,
              const std::string& from, std::ostream& out) {
  const Instance instance = load_instance(inst);
  const PartialDfa& dfa = instance.dfa;
  const bool decodable = instance.spec && is_counter_family(instance.spec->family);

  StateSet current = dfa.all_states();
  if (!from.empty()) {
    if (!decodable) throw UsageError("--from needs a counter family");
    std::vector<unsigned> digits;
    for (char ch : from) {
      if (ch < '0' || ch > '9') throw UsageError("--from takes decimal digits");
      digits.push_back(static_cast<unsigned>(ch - '0'));
    }
    try {
      current = encode_counting(*instance.spec, digits);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  Word word;
  try {
    word = parse_word(dfa, word_text);
  } catch (const InvalidLetter& e) {
    throw UsageError(e.what());
  }

  auto line = [&](std::size_t step, std::string_view letter, StateSet s) {
    out << std::setw(4) << step << "  " << std::left << std::setw(4) << letter
        << std::right << format_set(dfa, s);
    if (decodable) out << "  " << describe(decode_config(*instance.spec, s));
    out << '\n';
  };

  line(0, "-", current);
  for (std::size_t i = 0; i < word.size(); ++i) {
    const LetterId a = word[i];
    const auto next = apply_letter(dfa, current, a);
    if (!next) {
      StateSet killed;
      current.for_each([&](StateId q) {
        if (dfa.target(q, a) == kUndefined) killed.insert(q);
      });
      out << std::setw(4) << i + 1 << "  " << std::left << std::setw(4)
          << dfa.letter_name(a) << std::right << "KILL "
          << format_set(dfa, killed) << '\n';
      return kNegative;
    }
    current = *next;
    line(i + 1, dfa.letter_name(a), current);
  }
  return kOk;
}

std::pair<int, int> parse_range(const std::string& text, int k) {
  if (text.empty()) {
    if (k < 1) throw UsageError("verify needs --k or --k-range a..b");
    return {k, k};
  }
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("bad --k-range '" + text + "'");
  }
}

int cmd_verify(const InstanceFlags& inst, const std::string& range_text,
               bool timing, const LimitFlags& lim, std::ostream& out) {
  if (inst.family.empty()) throw UsageError("verify needs --family");
  const auto [lo, hi] = parse_range(range_text, inst.k);
  if (lo < 1 || hi < lo) throw UsageError("empty or invalid k range");

  std::vector<ConstructionSpec> specs;
  for (int k = lo; k <= hi; ++k) {
    const ConstructionSpec spec = parse_spec(inst, k);
    if (spec.family != Family::Panteleev) {
      guard_powerset(build(spec).dfa, lim);
    }
    specs.push_back(spec);
  }

  bool all_pass = true;
  bool capped = false;
  out << verify_header(timing) << '\n';
  for (const auto& spec : specs) {
    const VerifyReport report = verify_instance(spec, lim.limits());
    out << verify_row(report, timing) << '\n';
    all_pass = all_pass && report.pass;
    capped = capped || std::holds_alternative<Capped>(report.measured);
  }
  if (capped) return kCap;
  return all_pass ? kOk : kNegative;
}

int cmd_landau(long long n, std::ostream& out) {
  if (n < 0 || n > kMaxLandauN) {
    throw UsageError("n must lie in [0, " + std::to_string(kMaxLandauN) + "]");
  }
  const auto cycles = landau_cycle_type(static_cast<unsigned>(n));
  out << "g=" << landau(static_cast<unsigned>(n)) << ", cycles [";
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (i != 0) out << ',';
    out << cycles[i];
  }
  out << "]\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact careful-synchronisation and semigroup-diameter toolkit",
               "carsync"};
  app.require_subcommand(1);

  InstanceFlags inst;
  LimitFlags lim;
  std::string format = "json";
  std::string out_path;
  std::string target;
  std::string word;
  std::string from;
  std::string range;
  bool timing = false;
  long long landau_n = -1;

  auto* generate = app.add_subcommand("generate", "Write a construction");
  add_instance_flags(generate, inst, false);
  generate->add_option("--format", format, "json (default) | dot");
  generate->add_option("--out", out_path, "Output path (default stdout)");

  auto* sync = app.add_subcommand("sync", "Shortest carefully synchronising word");
  add_instance_flags(sync, inst, true);
  add_limit_flags(sync, lim);

  auto* depth = app.add_subcommand("depth", "Depth of a transformation");
  add_instance_flags(depth, inst, true);
  add_limit_flags(depth, lim);
  depth->add_option("--target", target,
                    "Image vector 'q0,q1,_' or subset target 'a,b->c'");

  auto* diameter = app.add_subcommand("diameter", "Semigroup diameter");
  add_instance_flags(diameter, inst, true);
  add_limit_flags(diameter, lim);

  auto* trace = app.add_subcommand("trace", "Replay a word and decode phases");
  add_instance_flags(trace, inst, true);
  trace->add_option("--word", word, "Space-separated letter names");
  trace->add_option("--from", from, "Start from this counter value (digits)");

  auto* verify = app.add_subcommand("verify", "Check claimed bounds");
  add_instance_flags(verify, inst, false);
  add_limit_flags(verify, lim);
  verify->add_option("--k-range", range, "Inclusive range a..b");
  verify->add_flag("--timing", timing, "Append wall-clock seconds per row");

  auto* landau_cmd = app.add_subcommand("landau", "Landau's function g(n)");
  landau_cmd->add_option("n,--n", landau_n, "n in [0, 10000]")->required();

  std::vector<const char*> argv{"carsync"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*generate) return cmd_generate(inst, format, out_path, out);
    if (*sync) return cmd_sync(inst, lim, out);
    if (*depth) return cmd_depth(inst, target, lim, out);
    if (*diameter) return cmd_diameter(inst, lim, out);
    if (*trace) return cmd_trace(inst, word, from, out);
    if (*verify) return cmd_verify(inst, range, timing, lim, out);
    if (*landau_cmd) return cmd_landau(landau_n, out);
  } catch (const ResourceCapExceeded& e) {
    out << "CAP\n";
    err << "carsync: " << e.what() << '\n';
    return kCap;
  } catch (const UsageError& e) {
    err << "carsync: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "carsync: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace carsync::cli
