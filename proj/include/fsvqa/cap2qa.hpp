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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fsvqa/qa2full.hpp"
#include "fsvqa/tagger.hpp"

namespace fsvqa {

// Class names drawn on for substituted negative questions: 1,000 object
// classes and 121 action classes (101 sports/activities + 20 daily-living).
struct SubstitutionLists {
  std::vector<std::string> agents;
  std::vector<std::string> actions;

  static SubstitutionLists load(const std::filesystem::path& agents_file,
                                const std::filesystem::path& actions_file);
};

// Curated members of the six question categories; a member may carry a
// distinct question noun ("apple" asks as "fruit").
class CategoryLexicons {
 public:
  struct Entry {
    std::string category;
    std::string label;
  };

  static CategoryLexicons load(const std::filesystem::path& file);

  const Entry* find(const std::string& lower_word) const;
  std::size_t member_count() const { return members_.size(); }

 private:
  std::unordered_map<std::string, Entry> members_;
};

enum class QaKind {
  yes_affirm,
  no_substituted,
  how_many,
  wh_subject,
  wh_doing,
  wh_category,
  wh_where,
};
const char* to_string(QaKind k);

struct GeneratedQA {
  std::string question;
  std::string answer;  // full-sentence answer
  std::string short_answer;
  QaKind kind = QaKind::yes_affirm;
};

// A concrete draw for one negative question, exposed so tests can pin the
// substitution instead of sampling it.
struct Substitution {
  enum class Kind { agent, action };
  Kind kind = Kind::agent;
  std::string phrase;
};

struct CaptionQa {
  std::int64_t caption_id = 0;
  GeneratedQA qa;
};

// Generates question/answer pairs from declarative captions: an affirmative
// yes-question, a substituted no-question, a count question, and wh
// questions. Apart from yes/no, the caption itself is the full answer.
class CaptionConverter {
 public:
  CaptionConverter(const Tagger& tagger, const Morph& morph,
                   const QaConverter& qa, const SubstitutionLists& lists,
                   const CategoryLexicons& categories)
      : tagger_(tagger),
        morph_(morph),
        qa_(qa),
        lists_(lists),
        categories_(categories) {}

  std::optional<GeneratedQA> affirm_question(const TaggedSentence& c) const;

  std::optional<GeneratedQA> negative_question(const TaggedSentence& c,
                                               const Substitution& sub) const;
  std::optional<GeneratedQA> negative_question(const TaggedSentence& c,
                                               std::uint64_t rng_seed) const;

  std::optional<GeneratedQA> how_many_question(const TaggedSentence& c) const;

  std::vector<GeneratedQA> wh_questions(const TaggedSentence& c) const;

  // All pairs for one caption, in a fixed kind order. rng_seed should
  // already mix the global seed with the caption id.
  std::vector<GeneratedQA> generate(std::string_view caption,
                                    std::uint64_t rng_seed) const;

  const Tagger& tagger() const { return tagger_; }

 private:
  const Tagger& tagger_;
  const Morph& morph_;
  const QaConverter& qa_;
  const SubstitutionLists& lists_;
  const CategoryLexicons& categories_;
};

// Thins the yes/no pairs of one image down to an alternating selection while
// guaranteeing at least one of each polarity. Non-yes/no pairs pass through.
// Alternation starts on the image id's parity so the corpus stays roughly
// even overall.
std::vector<CaptionQa> balance_yes_no(std::int64_t image_id,
                                      std::vector<CaptionQa> qas);

}  // namespace fsvqa
