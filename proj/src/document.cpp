// Copyright 2026 The ubraid Authors
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

#include "ubraid/document.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>

namespace ubraid {

std::string format_double(double x) {
  if (x == 0) return "0";  // also folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string serialize(const MatrixDocument& doc) {
  const auto& m = doc.matrix;
  std::string out = "{\n  \"rows\": " + std::to_string(m.rows()) + ",\n  \"cols\": " + std::to_string(m.cols()) +
                    ",\n  \"data\": [";
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const auto v = m(i, j);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw Error(Errc::shape, "non-finite matrix entry");
      out += (i == 0 && j == 0) ? "\n    " : ",\n    ";
      out += "[" + format_double(v.real()) + ", " + format_double(v.imag()) + "]";
    }
  out += "\n  ],\n  \"meta\": {";
  bool first = true;
  for (const auto& [k, v] : doc.meta) {
    out += first ? "\n    " : ",\n    ";
    out += nlohmann::json(k).dump() + ": " + nlohmann::json(v).dump();
    first = false;
  }
  out += first ? "}\n}\n" : "\n  }\n}\n";
  return out;
}

MatrixDocument parse_document(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse, e.what());
  }
  try {
    const auto rows = j.at("rows").get<Eigen::Index>(), cols = j.at("cols").get<Eigen::Index>();
    const auto& data = j.at("data");
    if (rows < 1 || cols < 1 || !data.is_array() || static_cast<Eigen::Index>(data.size()) != rows * cols)
      throw Error(Errc::parse, "data length must equal rows * cols");
    MatrixDocument doc{MatrixXcd(rows, cols), {}};
    for (Eigen::Index k = 0; k < rows * cols; ++k) {
      const auto& e = data[static_cast<std::size_t>(k)];
      if (!e.is_array() || e.size() != 2) throw Error(Errc::parse, "entries must be [re, im] pairs");
      doc.matrix(k / cols, k % cols) = {e[0].get<double>(), e[1].get<double>()};
    }
    if (j.contains("meta"))
      for (const auto& [k, v] : j.at("meta").items()) doc.meta[k] = v.is_string() ? v.get<std::string>() : v.dump();
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse, e.what());
  }
}

}  // namespace ubraid
