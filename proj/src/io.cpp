#include "nsm/io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace nsm {
namespace {

using nlohmann::json;

constexpr const char* kComponentNames[3] = {"T", "I", "F"};

std::vector<std::string> parse_label_array(const json& doc, const char* key) {
  if (!doc.contains(key)) {
    throw ValidationError(std::string("missing \"") + key + "\" array");
  }
  const json& arr = doc.at(key);
  if (!arr.is_array() || arr.empty()) {
    throw ValidationError(std::string("\"") + key +
                          "\" must be a non-empty array of strings");
  }
  std::vector<std::string> labels;
  labels.reserve(arr.size());
  for (const json& item : arr) {
    if (!item.is_string()) {
      throw ValidationError(std::string("\"") + key +
                            "\" must contain only strings");
    }
    labels.push_back(item.get<std::string>());
  }
  return labels;
}

NsValue parse_cell(const json& cell, const std::string& object,
                   const std::string& parameter) {
  const std::string where = "entry (" + object + ", " + parameter + ")";
  if (!cell.is_array() || cell.size() != 3) {
    throw ValidationError(where + " must be a [T, I, F] triple");
  }
  double components[3];
  for (std::size_t c = 0; c < 3; ++c) {
    if (!cell[c].is_number()) {
      throw ValidationError(where + ": component " + kComponentNames[c] +
                            " is not a number");
    }
    const double v = cell[c].get<double>();
    if (!(v >= 0.0 && v <= 1.0)) {
      std::ostringstream msg;
      msg << where << ": component " << kComponentNames[c] << " = "
          << cell[c].dump() << " is outside [0, 1]";
      throw ValidationError(msg.str());
    }
    components[c] = v;
  }
  return {UnitValue(components[0]), UnitValue(components[1]),
          UnitValue(components[2])};
}

std::string format_fixed(double v, int precision) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(precision) << v;
  return out.str();
}

}  // namespace

NsMatrix parse_matrix(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ValidationError("document root must be an object");
  }

  Universe universe{parse_label_array(doc, "universe")};
  ParameterSet parameters{parse_label_array(doc, "parameters")};

  if (!doc.contains("entries") || !doc.at("entries").is_array()) {
    throw ValidationError("missing \"entries\" array");
  }
  const json& entries = doc.at("entries");
  if (entries.size() != universe.size()) {
    throw ValidationError("entries has " + std::to_string(entries.size()) +
                          " rows, expected " + std::to_string(universe.size()));
  }

  std::vector<NsValue> cells;
  cells.reserve(universe.size() * parameters.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const json& row = entries[i];
    if (!row.is_array() || row.size() != parameters.size()) {
      throw ValidationError("entries row for object '" + universe.label(i) +
                            "' has " + std::to_string(row.size()) +
                            " cells, expected " +
                            std::to_string(parameters.size()));
    }
    for (std::size_t j = 0; j < row.size(); ++j) {
      cells.push_back(parse_cell(row[j], universe.label(i),
                                 parameters.label(j)));
    }
  }
  return {std::move(universe), std::move(parameters), std::move(cells)};
}

NsMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot read file '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_matrix(buffer.str());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

namespace {

// nlohmann's shortest round-trip formatting for a single scalar
std::string json_number(double v) { return json(v).dump(); }
std::string json_string(const std::string& s) { return json(s).dump(); }

std::string label_line(const std::vector<std::string>& labels) {
  std::string out = "[";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out += ", ";
    out += json_string(labels[i]);
  }
  return out + "]";
}

std::string triple_text(const NsValue& v) {
  return "[" + json_number(v.truth.get()) + ", " +
         json_number(v.indeterminacy.get()) + ", " +
         json_number(v.falsity.get()) + "]";
}

}  // namespace

std::string serialize_matrix(const NsMatrix& matrix) {
  std::string out = "{\n";
  out += "  \"universe\": " + label_line(matrix.row_labels().labels()) + ",\n";
  out += "  \"parameters\": " + label_line(matrix.col_labels().labels()) + ",\n";
  out += "  \"entries\": [\n";
  for (std::size_t i = 0; i < matrix.row_count(); ++i) {
    out += "    [";
    for (std::size_t j = 0; j < matrix.col_count(); ++j) {
      if (j > 0) out += ", ";
      out += triple_text(matrix.at(i, j));
    }
    out += i + 1 < matrix.row_count() ? "],\n" : "]\n";
  }
  out += "  ]\n}\n";
  return out;
}

std::string serialize_outcome(const DecisionOutcome& outcome) {
  std::string out = "{\n  \"scores\": [\n";
  for (std::size_t i = 0; i < outcome.per_object.size(); ++i) {
    const ObjectScore& entry = outcome.per_object[i];
    out += "    {\"object\": " + json_string(entry.object) +
           ", \"d\": " + triple_text(entry.d) +
           ", \"s\": " + json_number(entry.s) + "}";
    out += i + 1 < outcome.per_object.size() ? ",\n" : "\n";
  }
  out += "  ],\n  \"optimum\": [\n";
  for (std::size_t i = 0; i < outcome.optimum.size(); ++i) {
    const ObjectScore& entry = outcome.optimum[i];
    out += "    {\"object\": " + json_string(entry.object) +
           ", \"s\": " + json_number(entry.s) + "}";
    out += i + 1 < outcome.optimum.size() ? ",\n" : "\n";
  }
  out += "  ]\n}\n";
  return out;
}

std::string render_outcome_table(const DecisionOutcome& outcome,
                                 int precision) {
  const std::array<std::string, 5> headers{"object", "T", "I", "F", "score"};
  std::vector<std::array<std::string, 5>> rows;
  rows.reserve(outcome.per_object.size());
  for (const ObjectScore& entry : outcome.per_object) {
    rows.push_back({entry.object, format_fixed(entry.d.truth.get(), precision),
                    format_fixed(entry.d.indeterminacy.get(), precision),
                    format_fixed(entry.d.falsity.get(), precision),
                    format_fixed(entry.s, precision)});
  }

  std::array<std::size_t, 5> widths{};
  for (std::size_t c = 0; c < 5; ++c) {
    widths[c] = headers[c].size();
    for (const auto& row : rows) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }

  std::ostringstream out;
  // object column left-aligned, numeric columns right-aligned
  auto emit = [&](const std::array<std::string, 5>& row) {
    out << row[0] << std::string(widths[0] - row[0].size(), ' ');
    for (std::size_t c = 1; c < 5; ++c) {
      out << "  " << std::string(widths[c] - row[c].size(), ' ') << row[c];
    }
    out << "\n";
  };
  emit(headers);
  for (const auto& row : rows) emit(row);

  out << "optimum:";
  for (std::size_t i = 0; i < outcome.optimum.size(); ++i) {
    out << (i == 0 ? " " : ", ") << outcome.optimum[i].object;
  }
  if (!outcome.optimum.empty()) {
    out << " (score=" << format_fixed(outcome.optimum.front().s, precision)
        << ")";
  }
  out << "\n";
  return out.str();
}

}  // namespace nsm
