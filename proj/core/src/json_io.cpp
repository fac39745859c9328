#include "ept/json_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "ept/errors.hpp"
#include "ept/partition.hpp"

namespace ept {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return buffer.str();
}

json parse_text(const std::string& text, const std::string& path) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

double number_at(const json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where + " must be a number, got " + v.dump());
  return v.get<double>();
}

std::vector<std::vector<double>> square_matrix(const json& rows, std::size_t n,
                                               const std::string& key) {
  if (!rows.is_array() || rows.size() != n) {
    throw ParseError("\"" + key + "\" must be an array of " + std::to_string(n) + " rows");
  }
  std::vector<std::vector<double>> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != n) {
      throw ParseError("\"" + key + "\" row " + std::to_string(i + 1) + " must hold " +
                       std::to_string(n) + " numbers");
    }
    m[i].reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
      m[i].push_back(number_at(row[j], "\"" + key + "\" entry (" + std::to_string(i + 1) + "," +
                                           std::to_string(j + 1) + ")"));
    }
  }
  return m;
}

}  // namespace

QuadraticState load_space_file(const std::string& path) {
  const json doc = parse_text(read_text(path), path);
  if (!doc.is_object()) throw ParseError(path + ": top level must be an object");
  if (!doc.contains("omega")) throw ParseError(path + ": missing \"omega\"");
  if (!doc.contains("p")) throw ParseError(path + ": missing \"p\"");

  const json& omega = doc["omega"];
  if (!omega.is_array() || omega.empty()) {
    throw ParseError(path + ": \"omega\" must be a non-empty array of labels");
  }
  std::vector<std::string> labels;
  labels.reserve(omega.size());
  for (const json& label : omega) {
    if (!label.is_string()) {
      throw ParseError(path + ": \"omega\" entry " + label.dump() + " is not a string");
    }
    labels.push_back(label.get<std::string>());
  }
  const std::size_t n = labels.size();

  const std::vector<std::vector<double>> p_rows = square_matrix(doc["p"], n, "p");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (p_rows[i][j] != p_rows[j][i]) {
        throw ParseError(path + ": \"p\" is not exactly symmetric at (" + std::to_string(i + 1) +
                         "," + std::to_string(j + 1) + "); writers must symmetrize before writing");
      }
    }
  }
  std::vector<double> p;
  p.reserve(n * n);
  for (const auto& row : p_rows) p.insert(p.end(), row.begin(), row.end());

  std::vector<double> nu;
  if (doc.contains("nu")) {
    const json& weights = doc["nu"];
    if (!weights.is_array() || weights.size() != n) {
      throw ParseError(path + ": \"nu\" must hold " + std::to_string(n) + " weights");
    }
    nu.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      nu.push_back(number_at(weights[i], "\"nu\" entry " + std::to_string(i + 1)));
    }
  }

  try {
    return QuadraticState(SampleSpace(std::move(labels)), std::move(p), std::move(nu));
  } catch (const DomainError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string space_file_text(const QuadraticState& s) {
  ordered_json doc;
  const int n = s.space().size();
  doc["omega"] = s.space().labels();
  ordered_json nu = ordered_json::array();
  for (int x = 0; x < n; ++x) nu.push_back(s.weight(x));
  doc["nu"] = std::move(nu);
  ordered_json rows = ordered_json::array();
  for (int x = 0; x < n; ++x) {
    ordered_json row = ordered_json::array();
    for (int y = 0; y < n; ++y) row.push_back(s.p(x, y));
    rows.push_back(std::move(row));
  }
  doc["p"] = std::move(rows);
  return doc.dump(2) + "\n";
}

void save_space_file(const std::string& path, const QuadraticState& s) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << space_file_text(s);
  if (!out) throw IoError("cannot write " + path);
}

ContextRandomVariable load_rv_file(const std::string& path, const SampleSpace& space) {
  const json doc = parse_text(read_text(path), path);
  if (!doc.is_object()) throw ParseError(path + ": top level must be an object");
  if (!doc.contains("universe") || !doc["universe"].is_string()) {
    throw ParseError(path + ": missing string \"universe\"");
  }
  if (!doc.contains("values") || !doc["values"].is_object()) {
    throw ParseError(path + ": missing object \"values\"");
  }

  const Partition complete = parse_partition(space, doc["universe"].get<std::string>());
  Universe universe = [&] {
    try {
      return Universe(complete);
    } catch (const DomainError& e) {
      throw ParseError(path + ": \"universe\" " + std::string(e.what()));
    }
  }();

  const auto& blocks = universe.partition().blocks();
  std::vector<double> values(blocks.size(), 0.0);
  std::vector<char> assigned(blocks.size(), 0);
  for (const auto& [literal, value] : doc["values"].items()) {
    const Partition block_event = parse_partition(space, literal);
    if (block_event.block_count() != 1) {
      throw ParseError(path + ": values key \"" + literal + "\" must be a single block");
    }
    const auto& block = block_event.blocks().front();
    std::size_t index = blocks.size();
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b] == block) {
        index = b;
        break;
      }
    }
    if (index == blocks.size()) {
      throw ParseError(path + ": values key \"" + literal + "\" is not a block of the universe");
    }
    if (assigned[index]) {
      throw ParseError(path + ": values name the block \"" + literal + "\" twice");
    }
    assigned[index] = 1;
    values[index] = number_at(value, "values[\"" + literal + "\"]");
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (!assigned[b]) {
      throw ParseError(path + ": values miss the universe block \"" +
                       format_partition(Partition(space, {blocks[b]})) + "\"");
    }
  }
  return ContextRandomVariable(Context(std::move(universe)), std::move(values));
}

ProbabilityTransformation load_matrix_file(const std::string& path) {
  const json doc = parse_text(read_text(path), path);
  if (!doc.is_object()) throw ParseError(path + ": top level must be an object");
  if (!doc.contains("matrix")) throw ParseError(path + ": missing \"matrix\"");
  const json& rows = doc["matrix"];
  if (!rows.is_array() || rows.empty()) {
    throw ParseError(path + ": \"matrix\" must be a non-empty array of rows");
  }
  const std::size_t n = rows.size();
  const std::vector<std::vector<double>> m = square_matrix(rows, n, "matrix");

  bool transpose = false;
  if (doc.contains("orientation")) {
    const json& orientation = doc["orientation"];
    if (!orientation.is_string()) {
      throw ParseError(path + ": \"orientation\" must be \"column\" or \"row\"");
    }
    const std::string text = orientation.get<std::string>();
    if (text == "row") {
      transpose = true;
    } else if (text != "column") {
      throw ParseError(path + ": \"orientation\" must be \"column\" or \"row\", got \"" + text +
                       "\"");
    }
  }

  std::vector<double> flat(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      flat[i * n + j] = transpose ? m[j][i] : m[i][j];
    }
  }
  return ProbabilityTransformation(std::move(flat), static_cast<int>(n));
}

}  // namespace ept
