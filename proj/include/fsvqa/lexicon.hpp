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

#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fsvqa/tags.hpp"
#include "fsvqa/types.hpp"

namespace fsvqa {

struct VerbEntry {
  std::string lemma;
  std::string past;
  std::string participle;
  std::string third_sg;
};

// Fixed word lists backing the tagger and the conjugator:
//   closed_class.tsv    surface<TAB>tag, one entry per line
//   irregular_verbs.tsv lemma<TAB>past<TAB>participle<TAB>3sg
class Lexicon {
 public:
  static Lexicon load(const std::filesystem::path& dir);

  std::optional<Tag> closed_class(const std::string& lower_surface) const;
  const VerbEntry* verb_by_lemma(const std::string& lemma) const;
  // Looks a surface form up against every column of the verb table.
  const VerbEntry* verb_by_form(const std::string& lower_surface) const;

  static bool is_be_form(std::string_view lower);
  static bool is_do_form(std::string_view lower);
  static bool is_have_form(std::string_view lower);
  static bool is_will_form(std::string_view lower);

  // Subject-case counterpart of an object pronoun ("them" -> "they").
  static std::optional<std::string> subject_case(const std::string& lower);

  std::size_t closed_class_size() const { return closed_.size(); }
  std::size_t verb_count() const { return verbs_.size(); }

 private:
  std::unordered_map<std::string, Tag> closed_;
  std::vector<VerbEntry> verbs_;
  std::unordered_map<std::string, std::size_t> by_lemma_;
  std::unordered_map<std::string, std::size_t> by_form_;
};

}  // namespace fsvqa
