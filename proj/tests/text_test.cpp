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
#include "fsvqa/text.hpp"

using namespace fsvqa;
using V = std::vector<std::string>;

TEST_CASE("tokenize splits punctuation") {
  CHECK(text::tokenize("Is she happy?") == V{"Is", "she", "happy", "?"});
  CHECK(text::tokenize("Who threw the ball?") ==
        V{"Who", "threw", "the", "ball", "?"});
  CHECK(text::tokenize("Yes, he got hurt.") ==
        V{"Yes", ",", "he", "got", "hurt", "."});
}

TEST_CASE("tokenize splits contractions") {
  CHECK(text::tokenize("isn't it red?") == V{"is", "n't", "it", "red", "?"});
  CHECK(text::tokenize("won't he go?") == V{"will", "n't", "he", "go", "?"});
  CHECK(text::tokenize("can't") == V{"can", "n't"});
  CHECK(text::tokenize("the man's hat") == V{"the", "man", "'s", "hat"});
  CHECK(text::tokenize("they're here") == V{"they", "'re", "here"});
}

TEST_CASE("tokenize keeps hyphenated words whole") {
  CHECK(text::tokenize("doing push-ups on the tree") ==
        V{"doing", "push-ups", "on", "the", "tree"});
}

TEST_CASE("detokenize attaches punctuation and clitics") {
  CHECK(text::detokenize({"Yes", ",", "he", "got", "hurt", "."}) ==
        "Yes, he got hurt.");
  CHECK(text::detokenize({"is", "n't", "it", "red", "?"}) == "isn't it red?");
  CHECK(text::detokenize({"the", "man", "'s", "hat"}) == "the man's hat");
}

TEST_CASE("tokenize is idempotent over detokenized output") {
  V cases = {"Is she happy?", "Yes, he got hurt.",
             "Are the birds doing push-ups on the tree?"};
  for (const auto& s : cases) {
    V once = text::tokenize(s);
    CHECK(text::tokenize(text::detokenize(once)) == once);
  }
}

TEST_CASE("normalize_answer") {
  CHECK(text::normalize_answer("  Yes  ") == "yes");
  CHECK(text::normalize_answer("Not   sure") == "not sure");
  CHECK(text::normalize_answer("red.") == "red");
  CHECK(text::normalize_answer("2") == "2");
  CHECK(text::normalize_answer("") == "");
}

TEST_CASE("metric_tokens strips punctuation and lowercases") {
  CHECK(text::metric_tokens("Yes, he got hurt.") ==
        V{"yes", "he", "got", "hurt"});
  CHECK(text::metric_tokens("There are 2 pens.") ==
        V{"there", "are", "2", "pens"});
  CHECK(text::metric_tokens("push-ups!") == V{"pushups"});
  CHECK(text::metric_tokens("") == V{});
}

TEST_CASE("capitalize and decapitalize") {
  CHECK(text::capitalize("apple is red.") == "Apple is red.");
  CHECK(text::capitalize("3 people are walking.") == "3 people are walking.");
  CHECK(text::capitalize("") == "");
  CHECK(text::decapitalize("The ball") == "the ball");
}

TEST_CASE("contains_token_run") {
  V hay = {"yes", "he", "got", "hurt"};
  CHECK(text::contains_token_run(hay, {"he", "got"}));
  CHECK(text::contains_token_run(hay, hay));
  CHECK_FALSE(text::contains_token_run(hay, {"got", "he"}));
  CHECK_FALSE(text::contains_token_run({"he"}, {"he", "got"}));
}
