// Copyright 2026 The fsvqa-tools Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace fsvqa {

// Penn-style part-of-speech tags, restricted to the ones the pipeline needs.
enum class Tag {
  NN, NNS, NNP,
  VB, VBD, VBG, VBN, VBP, VBZ,
  MD, JJ, RB,
  WP, WDT, WRB,
  EX, IN, TO, DT, CD,
  PRP, PRPS,  // PRPS == PRP$
  CC, UH,
  PUNCT,
};

inline constexpr std::array<std::string_view, 25> kTagNames = {
    "NN", "NNS", "NNP", "VB", "VBD", "VBG", "VBN", "VBP", "VBZ",
    "MD", "JJ", "RB", "WP", "WDT", "WRB", "EX", "IN", "TO", "DT",
    "CD", "PRP", "PRP$", "CC", "UH", ".",
};

inline std::string_view to_string(Tag t) {
  return kTagNames[static_cast<int>(t)];
}

inline std::optional<Tag> tag_from_string(std::string_view s) {
  for (std::size_t i = 0; i < kTagNames.size(); ++i)
    if (kTagNames[i] == s) return static_cast<Tag>(i);
  return std::nullopt;
}

inline bool is_verb_tag(Tag t) {
  switch (t) {
    case Tag::VB: case Tag::VBD: case Tag::VBG:
    case Tag::VBN: case Tag::VBP: case Tag::VBZ:
      return true;
    default:
      return false;
  }
}

inline bool is_finite_verb_tag(Tag t) {
  return t == Tag::VBD || t == Tag::VBP || t == Tag::VBZ;
}

inline bool is_noun_tag(Tag t) {
  return t == Tag::NN || t == Tag::NNS || t == Tag::NNP;
}

inline bool is_wh_tag(Tag t) {
  return t == Tag::WP || t == Tag::WDT || t == Tag::WRB;
}

}  // namespace fsvqa
