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

#pragma once

#include <map>
#include <string>
#include <string_view>

#include "ubraid/types.hpp"

namespace ubraid {

/**
 * JSON matrix document:
 *   {"rows": R, "cols": C, "data": [[re, im], ...], "meta": {"family": ..., ...}}
 * with data in row-major order. Numbers are written with 17 significant
 * digits, so parse(serialize(doc)) reproduces every entry bit for bit.
 */
struct MatrixDocument {
  MatrixXcd matrix;
  std::map<std::string, std::string> meta;
};

std::string serialize(const MatrixDocument& doc);
MatrixDocument parse_document(std::string_view text);

/// "%.17g" rendering used by every numeric output.
std::string format_double(double x);

}  // namespace ubraid
