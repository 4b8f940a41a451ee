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
#include "fsvqa/tagger.hpp"

using namespace fsvqa;

namespace {

const Lexicon& lex() {
  static Lexicon l = Lexicon::load(FSVQA_DATA_DIR);
  return l;
}

const Tagger& tagger() {
  static Tagger t(lex());
  return t;
}

std::vector<Tag> tags_of(std::string_view sentence) {
  std::vector<Tag> out;
  for (const Token& t : tagger().tag(Tagger::tokenize(sentence)))
    out.push_back(t.tag);
  return out;
}

// "NP[0,2)" style signature of the chunk layer.
std::string chunk_sig(const TaggedSentence& s) {
  std::string sig;
  for (const Chunk& c : s.chunks) {
    sig += to_string(c.kind);
    sig += '[';
    sig += std::to_string(c.span.begin);
    sig += ',';
    sig += std::to_string(c.span.end);
    sig += ')';
    sig += ' ';
  }
  if (!sig.empty()) sig.pop_back();
  return sig;
}

}  // namespace

TEST_CASE("hand-tagged question fixtures") {
  using enum Tag;
  CHECK(tags_of("Did he get hurt?") ==
        std::vector<Tag>{VBD, PRP, VB, VBN, PUNCT});
  CHECK(tags_of("How many pens are there?") ==
        std::vector<Tag>{WRB, JJ, NNS, VBP, EX, PUNCT});
  CHECK(tags_of("May he cross the road?") ==
        std::vector<Tag>{MD, PRP, VB, DT, NN, PUNCT});
  CHECK(tags_of("Is she happy?") == std::vector<Tag>{VBZ, PRP, JJ, PUNCT});
  CHECK(tags_of("Who threw the ball?") ==
        std::vector<Tag>{WP, VBD, DT, NN, PUNCT});
  CHECK(tags_of("What is the man eating?") ==
        std::vector<Tag>{WP, VBZ, DT, NN, VBG, PUNCT});
  CHECK(tags_of("Which hand is holding it?") ==
        std::vector<Tag>{WDT, NN, VBZ, VBG, PRP, PUNCT});
}

TEST_CASE("hand-tagged caption fixtures") {
  using enum Tag;
  CHECK(tags_of("A dog jumped.") == std::vector<Tag>{DT, NN, VBD, PUNCT});
  CHECK(tags_of("People are playing baseball.") ==
        std::vector<Tag>{NNS, VBP, VBG, NN, PUNCT});
  CHECK(tags_of("There are two cats.") ==
        std::vector<Tag>{EX, VBP, CD, NNS, PUNCT});
  // Base form after a plural subject reads as finite present.
  CHECK(tags_of("Dogs run in a park.") ==
        std::vector<Tag>{NNS, VBP, IN, DT, NN, PUNCT});
  // ... but not when a fronted auxiliary licenses the base form.
  CHECK(tags_of("Do dogs run?") == std::vector<Tag>{VBP, NNS, VB, PUNCT});
  CHECK(tags_of("Has he run?") == std::vector<Tag>{VBZ, PRP, VBN, PUNCT});
}

TEST_CASE("number words and numerals") {
  using enum Tag;
  CHECK(tags_of("Six cars are parked.") ==
        std::vector<Tag>{CD, NNS, VBP, VBN, PUNCT});
  CHECK(tags_of("There are 2 pens.") ==
        std::vector<Tag>{EX, VBP, CD, NNS, PUNCT});
}

TEST_CASE("chunk layer") {
  const Tagger& t = tagger();
  CHECK(chunk_sig(t.analyze("How many pens are there?")) ==
        "WH[0,2) NP[2,3) VP[3,4) EX[4,5)");
  CHECK(chunk_sig(t.analyze("Did he get hurt?")) ==
        "VP[0,1) NP[1,2) VP[2,4)");
  CHECK(chunk_sig(t.analyze("Will the boy fall asleep?")) ==
        "MD[0,1) NP[1,3) VP[3,4) JJ[4,5)");
  CHECK(chunk_sig(t.analyze("A boy would hit the ball.")) ==
        "NP[0,2) MD[2,3) VP[3,4) NP[4,6)");
  CHECK(chunk_sig(t.analyze("Dogs run in a park.")) ==
        "NP[0,1) VP[1,2) IN_PP[2,5)");
  CHECK(chunk_sig(t.analyze("What food is on the table?")) ==
        "WH[0,1) NP[1,2) VP[2,3) IN_PP[3,6)");
}

TEST_CASE("numeral sub-span inside a noun phrase") {
  TaggedSentence s = tagger().analyze("There are two cats.");
  REQUIRE(s.chunks.size() == 3);
  const Chunk& np = s.chunks[2];
  CHECK(np.kind == ChunkKind::NP);
  REQUIRE(np.num.has_value());
  CHECK(np.num->begin == 2);
  CHECK(np.num->end == 3);
}

TEST_CASE("conjoined noun phrases merge") {
  TaggedSentence s = tagger().analyze("A cat and a dog sat.");
  REQUIRE(!s.chunks.empty());
  CHECK(s.chunks[0].kind == ChunkKind::NP);
  CHECK(s.chunks[0].conjoined);
  CHECK(s.chunks[0].span.end == 5);
}

TEST_CASE("terminal detection") {
  CHECK(tagger().analyze("Is she happy?").terminal == Terminal::question);
  CHECK(tagger().analyze("A dog jumped.").terminal == Terminal::declarative);
}

TEST_CASE("covering_chunks requires a full tiling") {
  const Tagger& t = tagger();
  auto covered = covering_chunks(t.analyze("A boy would hit the ball."));
  REQUIRE(covered.has_value());
  CHECK(covered->size() == 4);

  // "quickly" is left unchunked, so there is no tiling.
  auto gap = covering_chunks(t.analyze("A dog quickly jumped."));
  CHECK_FALSE(gap.has_value());
}

TEST_CASE("main_clause trims conditions and choice tails") {
  const Tagger& t = tagger();
  CHECK(t.main_clause(t.analyze("If it rains, is she happy?")).surface() ==
        "is she happy?");
  CHECK(t.main_clause(t.analyze("Is the light red, green or blue?"))
            .surface() == "Is the light red?");
  CHECK(t.main_clause(t.analyze("Is she happy?")).surface() ==
        "Is she happy?");
}
