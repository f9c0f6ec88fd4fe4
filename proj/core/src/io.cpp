#include "carsync/io.hpp"

#include <sstream>

#include <json.hpp>

namespace carsync {

namespace {

using nlohmann::json;

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  out += '"';
  return out;
}

std::vector<std::string> string_array(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end() || !it->is_array()) {
    throw DocumentError(std::string("field '") + key + "' must be an array");
  }
  std::vector<std::string> out;
  for (const auto& v : *it) {
    if (!v.is_string()) {
      throw DocumentError(std::string("field '") + key +
                          "' must contain strings");
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

std::string to_document(const PartialDfa& dfa) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  doc["name"] = dfa.name();
  doc["states"] = dfa.state_names();
  doc["letters"] = dfa.letter_names();
  auto delta = nlohmann::ordered_json::array();
  for (const auto& row : dfa.delta()) {
    auto out_row = nlohmann::ordered_json::array();
    for (StateId t : row) {
      if (t == kUndefined) {
        out_row.push_back(nullptr);
      } else {
        out_row.push_back(t);
      }
    }
    delta.push_back(std::move(out_row));
  }
  doc["delta"] = std::move(delta);
  return doc.dump(2) + "\n";
}

PartialDfa from_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DocumentError("document must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "name" && key != "states" && key != "letters" &&
        key != "delta") {
      throw DocumentError("unknown field '" + key + "'");
    }
  }
  const auto name_it = doc.find("name");
  if (name_it == doc.end() || !name_it->is_string()) {
    throw DocumentError("field 'name' must be a string");
  }
  auto states = string_array(doc, "states");
  auto letters = string_array(doc, "letters");

  const auto delta_it = doc.find("delta");
  if (delta_it == doc.end() || !delta_it->is_array()) {
    throw DocumentError("field 'delta' must be an array");
  }
  std::vector<std::vector<StateId>> delta;
  for (const auto& row : *delta_it) {
    if (!row.is_array()) throw DocumentError("delta rows must be arrays");
    std::vector<StateId> out_row;
    for (const auto& v : row) {
      if (v.is_null()) {
        out_row.push_back(kUndefined);
      } else if (v.is_number_unsigned() &&
                 v.get<std::uint64_t>() < kUndefined) {
        out_row.push_back(static_cast<StateId>(v.get<std::uint64_t>()));
      } else {
        throw DocumentError("delta entries must be state indices or null");
      }
    }
    delta.push_back(std::move(out_row));
  }

  PartialDfa dfa(name_it->get<std::string>(), std::move(states),
                 std::move(letters), std::move(delta));
  const auto defects = validate(dfa);
  if (!defects.empty()) {
    std::string message = "invalid automaton:";
    for (const auto& d : defects) message += "\n  " + d;
    throw DocumentError(message);
  }
  return dfa;
}

std::string to_dot(const PartialDfa& dfa) {
  std::ostringstream out;
  out << "digraph " << quoted(dfa.name()) << " {\n";
  out << "  rankdir=LR;\n";
  for (const auto& s : dfa.state_names()) out << "  " << quoted(s) << ";\n";
  for (LetterId a = 0; a < dfa.num_letters(); ++a) {
    const auto& row = dfa.delta()[a];
    for (StateId q = 0; q < row.size(); ++q) {
      if (row[q] == kUndefined) continue;
      out << "  " << quoted(dfa.state_name(q)) << " -> "
          << quoted(dfa.state_name(row[q]))
          << " [label=" << quoted(dfa.letter_name(a)) << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace carsync
