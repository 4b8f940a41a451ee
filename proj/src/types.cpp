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

#include "fsvqa/types.hpp"

namespace fsvqa {

const char* to_string(Split s) {
  return s == Split::train ? "train" : "val";
}

const char* to_string(Version v) {
  return v == Version::regular ? "regular" : "augmented";
}

const char* to_string(Provenance p) {
  return p == Provenance::converted_vqa ? "converted_vqa" : "converted_caption";
}

const char* to_string(QuestionCategory c) {
  switch (c) {
    case QuestionCategory::yes_no: return "yes_no";
    case QuestionCategory::number: return "number";
    case QuestionCategory::other: return "other";
  }
  return "other";
}

std::optional<Split> split_from_string(std::string_view s) {
  if (s == "train") return Split::train;
  if (s == "val") return Split::val;
  return std::nullopt;
}

std::optional<Version> version_from_string(std::string_view s) {
  if (s == "regular") return Version::regular;
  if (s == "augmented") return Version::augmented;
  return std::nullopt;
}

std::optional<Provenance> provenance_from_string(std::string_view s) {
  if (s == "converted_vqa") return Provenance::converted_vqa;
  if (s == "converted_caption") return Provenance::converted_caption;
  return std::nullopt;
}

std::optional<QuestionCategory> category_from_string(std::string_view s) {
  if (s == "yes_no") return QuestionCategory::yes_no;
  if (s == "number") return QuestionCategory::number;
  if (s == "other") return QuestionCategory::other;
  return std::nullopt;
}

}  // namespace fsvqa
