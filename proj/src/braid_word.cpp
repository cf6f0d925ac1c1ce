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

#include <charconv>
#include <cstdlib>

#include "ubraid/links.hpp"

namespace ubraid {

void BraidWord::validate() const {
  if (strands < 1) throw Error(Errc::letter, "strand count must be >= 1");
  for (int g : letters)
    if (g == 0 || std::abs(g) > strands - 1)
      throw Error(Errc::letter, "letter " + std::to_string(g) + " invalid for " + std::to_string(strands) + " strands");
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

BraidWord parse_braid_word(std::string_view text, int strands) {
  BraidWord w{strands, {}};
  text = trim(text);
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view tok = trim(text.substr(0, comma));
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    int g = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), g);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error(Errc::letter, "cannot read letter '" + std::string(tok) + "'");
    w.letters.push_back(g);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (trim(text).empty()) throw Error(Errc::letter, "trailing comma");
  }
  w.validate();
  return w;
}

std::string format_braid_word(const BraidWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w.letters[i]);
  }
  return out;
}

}  // namespace ubraid
