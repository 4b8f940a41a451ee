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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "fsvqa/qa2full.hpp"

using namespace fsvqa;

namespace {

const QaConverter& converter() {
  static Lexicon lex = Lexicon::load(FSVQA_DATA_DIR);
  static Tagger tagger(lex);
  static Morph morph(lex);
  static QaConverter conv(tagger, morph);
  return conv;
}

struct Golden {
  const char* question;
  const char* answer;
  const char* full;
  QuestionCategory category;
};

constexpr QuestionCategory kYes = QuestionCategory::yes_no;
constexpr QuestionCategory kNum = QuestionCategory::number;
constexpr QuestionCategory kOther = QuestionCategory::other;

// clang-format off
const Golden kGolden[] = {
    {"Did he get hurt?", "yes", "Yes, he got hurt.", kYes},
    {"Is she happy?", "no", "No, she is not happy.", kYes},
    {"Will the boy fall asleep?", "yes", "Yes, the boy will fall asleep.", kYes},
    {"May he cross the road?", "no", "No, he may not cross the road.", kYes},
    {"How many pens are there?", "2", "There are 2 pens.", kNum},
    {"How many people are walking?", "3", "3 people are walking.", kNum},
    {"How many pens does he have?", "4", "He has 4 pens.", kNum},
    {"Who are they?", "students", "They are students.", kOther},
    {"What food is on the table?", "apple", "Apple is on the table.", kOther},
    {"Which hand is holding it?", "left", "Left hand is holding it.", kOther},
    {"Who would like this?", "dog", "Dog would like this.", kOther},
    {"What would the man eat?", "apple", "The man would eat apple.", kOther},
    {"Who threw the ball?", "pitcher", "Pitcher threw the ball.", kOther},
    {"What is the man eating?", "apple", "The man is eating apple.", kOther},
};
// clang-format on

}  // namespace

TEST_CASE("golden answer conversions") {
  const QaConverter& conv = converter();
  for (const Golden& g : kGolden) {
    CAPTURE(g.question);
    Conversion c = conv.convert(g.question, g.answer);
    CHECK(c.full_answer == g.full);
    CHECK(c.category == g.category);
    CHECK_FALSE(c.fallback);
    CHECK_FALSE(c.rule_id.empty());
  }
}

TEST_CASE("question classification") {
  const QaConverter& conv = converter();
  const Tagger& t = conv.tagger();
  auto cat = [&](std::string_view q) { return conv.classify(t.analyze(q)); };
  CHECK(cat("Did he get hurt?") == QuestionCategory::yes_no);
  CHECK(cat("Are there cats?") == QuestionCategory::yes_no);
  CHECK(cat("May he cross the road?") == QuestionCategory::yes_no);
  CHECK(cat("How many pens are there?") == QuestionCategory::number);
  CHECK(cat("Who threw the ball?") == QuestionCategory::other);
  CHECK(cat("What is the man eating?") == QuestionCategory::other);
  CHECK(cat("Where do dogs run?") == QuestionCategory::other);
}

TEST_CASE("negative polarity variants") {
  const QaConverter& conv = converter();
  CHECK(conv.convert("Did he get hurt?", "no").full_answer ==
        "No, he did not get hurt.");
  CHECK(conv.convert("Is she happy?", "yes").full_answer ==
        "Yes, she is happy.");
  CHECK(conv.convert("Will the boy fall asleep?", "no").full_answer ==
        "No, the boy will not fall asleep.");
  CHECK(conv.convert("How many pens does he have?", "0").full_answer ==
        "He has 0 pens.");
}

TEST_CASE("short answer normalization inside productions") {
  const QaConverter& conv = converter();
  // Case folding and surrounding space are cleaned before insertion.
  CHECK(conv.convert("Who threw the ball?", " Pitcher ").full_answer ==
        "Pitcher threw the ball.");
  CHECK(conv.convert("Who are they?", "STUDENTS").full_answer ==
        "They are students.");
  // "n't" contractions expand before negation handling.
  Conversion c = conv.convert("Isn't she happy?", "no");
  CHECK(c.category == QuestionCategory::yes_no);
  CHECK(c.full_answer == "No, she is not happy.");
}

TEST_CASE("fallback policy") {
  const QaConverter& conv = converter();

  // Ungrammatical question: no rule can tile it.
  Conversion c1 = conv.convert("Pens how blue quickly?", "yes");
  CHECK(c1.fallback);
  CHECK(c1.rule_id.empty());
  CHECK(c1.full_answer == "Yes.");

  // A yes/no-shaped question with a non-polar answer falls back too.
  Conversion c2 = conv.convert("Is she happy?", "maybe");
  CHECK(c2.fallback);
  CHECK(c2.full_answer == "Maybe.");

  // Fallback capitalizes and terminates the raw answer.
  Conversion c3 = conv.convert("???", "two dogs");
  CHECK(c3.fallback);
  CHECK(c3.full_answer == "Two dogs.");
}

TEST_CASE("main clause reduction feeds the rules") {
  const QaConverter& conv = converter();
  Conversion c = conv.convert("If it rains, is she happy?", "no");
  CHECK_FALSE(c.fallback);
  CHECK(c.full_answer == "No, she is not happy.");
}

TEST_CASE("rule table is listable") {
  const auto& rules = QaConverter::rules();
  REQUIRE(rules.size() >= 13);
  int yn = 0, num = 0, other = 0;
  for (const auto& r : rules) {
    CHECK_FALSE(r.id.empty());
    CHECK_FALSE(r.pattern.empty());
    CHECK_FALSE(r.production.empty());
    if (r.category == QuestionCategory::yes_no) ++yn;
    if (r.category == QuestionCategory::number) ++num;
    if (r.category == QuestionCategory::other) ++other;
  }
  CHECK(yn == 3);
  CHECK(num == 3);
  CHECK(other == 7);
  // Identifiers are unique.
  for (size_t i = 0; i < rules.size(); ++i)
    for (size_t j = i + 1; j < rules.size(); ++j)
      CHECK(rules[i].id != rules[j].id);
}
