// Copyright 2026 The qtexp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "qtexp/error.hpp"

namespace qtexp::io {
namespace {

double finite_number(const nlohmann::json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(std::string(what) + " must be finite");
  return v;
}

cplx parse_entry(const nlohmann::json& e) {
  if (e.is_number()) return {finite_number(e, "matrix entry"), 0.0};
  if (e.is_array() && e.size() == 2) return {finite_number(e[0], "real part"), finite_number(e[1], "imaginary part")};
  throw ParseError("matrix entries must be [re, im] pairs");
}

}  // namespace

MatrixInput parse_matrix_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level must be an object");
  if (!doc.contains("matrix")) throw ParseError("missing \"matrix\"");

  const nlohmann::json& rows = doc["matrix"];
  if (!rows.is_array() || rows.size() != 4) throw ParseError("\"matrix\" must have 4 rows");
  MatrixInput in;
  for (int i = 0; i < 4; ++i) {
    const nlohmann::json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != 4) throw ParseError("every row must have 4 entries");
    for (int j = 0; j < 4; ++j) in.matrix(i, j) = parse_entry(row[static_cast<std::size_t>(j)]);
  }
  if (doc.contains("scalar") && !doc["scalar"].is_null()) in.scalar = finite_number(doc["scalar"], "\"scalar\"");
  if (doc.contains("params")) in.params = doc["params"];
  return in;
}

MatrixInput load_matrix_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_matrix_json(ss.str());
}

nlohmann::json matrix_to_json(const Mat4c& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < 4; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < 4; ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path);
  f << text;
}

}  // namespace qtexp::io
