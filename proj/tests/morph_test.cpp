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
#include "fsvqa/morph.hpp"

using namespace fsvqa;

namespace {

const Lexicon& lex() {
  static Lexicon l = Lexicon::load(FSVQA_DATA_DIR);
  return l;
}

const Morph& morph() {
  static Morph m(lex());
  return m;
}

const Tagger& tagger() {
  static Tagger t(lex());
  return t;
}

VerbForm vf(const std::string& surface, Tag tag) {
  return morph().verb_form(Token{surface, tag});
}

}  // namespace

TEST_CASE("lemma recovery") {
  CHECK(vf("threw", Tag::VBD).lemma == "throw");
  CHECK(vf("got", Tag::VBD).lemma == "get");
  CHECK(vf("eating", Tag::VBG).lemma == "eat");
  CHECK(vf("holding", Tag::VBG).lemma == "hold");
  CHECK(vf("carries", Tag::VBZ).lemma == "carry");
  CHECK(vf("jumped", Tag::VBD).lemma == "jump");
  CHECK(vf("stopped", Tag::VBD).lemma == "stop");
  CHECK(vf("making", Tag::VBG).lemma == "make");
  CHECK(vf("are", Tag::VBP).lemma == "be");
  CHECK(vf("were", Tag::VBD).lemma == "be");
}

TEST_CASE("regular inflection") {
  const Morph& m = morph();
  CHECK(m.third_sg("carry") == "carries");
  CHECK(m.third_sg("watch") == "watches");
  CHECK(m.third_sg("walk") == "walks");
  CHECK(m.past("carry") == "carried");
  CHECK(m.past("stop") == "stopped");
  CHECK(m.past("file") == "filed");
  CHECK(m.past("throw") == "threw");
  CHECK(m.participle("throw") == "thrown");
  CHECK(m.participle("jump") == "jumped");
}

TEST_CASE("tense of finite forms") {
  const Morph& m = morph();
  CHECK(m.tense(vf("did", Tag::VBD)) == Tense::past);
  CHECK(m.tense(vf("is", Tag::VBZ)) == Tense::present);
  CHECK(m.tense(vf("will", Tag::MD)) == Tense::future);
  CHECK(m.tense(vf("would", Tag::MD)) == Tense::past);
  CHECK(m.tense(vf("may", Tag::MD)) == Tense::present);
  CHECK_THROWS_AS(m.tense(vf("eaten", Tag::VBN)), std::domain_error);
}

TEST_CASE("conjugation carries the asking tense") {
  const Morph& m = morph();
  CHECK(m.conjug(vf("get", Tag::VB), Tense::past, PersonNumber::sing3) ==
        "got");
  CHECK(m.conjug(vf("cross", Tag::VB), Tense::present, PersonNumber::sing3) ==
        "crosses");
  CHECK(m.conjug(vf("run", Tag::VB), Tense::present, PersonNumber::other) ==
        "run");
  CHECK(m.conjug(vf("fall", Tag::VB), Tense::future, PersonNumber::sing3) ==
        "will fall");
  CHECK(m.conjug(vf("happy", Tag::JJ), Tense::present, PersonNumber::sing3) ==
        "happy");
  // Progressive heads rebuild with the matching "be".
  CHECK(m.conjug(vf("eating", Tag::VBG), Tense::present,
                 PersonNumber::sing3) == "is eating");
  CHECK(m.conjug(vf("walking", Tag::VBG), Tense::present,
                 PersonNumber::other) == "are walking");
  CHECK(m.conjug(vf("are", Tag::VBP), Tense::present, PersonNumber::sing3) ==
        "is");
}

TEST_CASE("negation") {
  const Morph& m = morph();
  CHECK(m.negate(vf("got", Tag::VBD), Tense::past, PersonNumber::sing3) ==
        "did not get");
  CHECK(m.negate(vf("is", Tag::VBZ), Tense::present, PersonNumber::sing3) ==
        "is not");
  CHECK(m.negate(vf("may", Tag::MD), Tense::present, PersonNumber::sing3) ==
        "may not");
  CHECK(m.negate(vf("walks", Tag::VBZ), Tense::present, PersonNumber::sing3) ==
        "does not walk");
  CHECK(m.negate(vf("walk", Tag::VBP), Tense::present, PersonNumber::other) ==
        "do not walk");
}

TEST_CASE("subject number") {
  const Tagger& t = tagger();
  auto np_of = [&](std::string_view s) {
    TaggedSentence ts = t.analyze(s);
    REQUIRE(!ts.chunks.empty());
    return std::pair<TaggedSentence, Chunk>(ts, ts.chunks.front());
  };
  auto [s1, np1] = np_of("The boy runs.");
  CHECK(Morph::subject_number(s1, np1) == PersonNumber::sing3);
  auto [s2, np2] = np_of("Dogs run.");
  CHECK(Morph::subject_number(s2, np2) == PersonNumber::other);
  auto [s3, np3] = np_of("They run.");
  CHECK(Morph::subject_number(s3, np3) == PersonNumber::other);
  auto [s4, np4] = np_of("She runs.");
  CHECK(Morph::subject_number(s4, np4) == PersonNumber::sing3);
  auto [s5, np5] = np_of("A cat and a dog run.");
  CHECK(Morph::subject_number(s5, np5) == PersonNumber::other);
}

TEST_CASE("cluster tense") {
  const Morph& m = morph();
  const Tagger& t = tagger();
  auto cluster_tense = [&](std::string_view s) {
    TaggedSentence ts = t.analyze(s);
    for (const Chunk& c : ts.chunks)
      if (c.kind == ChunkKind::VP || c.kind == ChunkKind::MD)
        return m.tense_of_cluster(ts, {c.span.begin, ts.content_end()});
    throw std::logic_error("no verb cluster");
  };
  CHECK(cluster_tense("He has eaten.") == Tense::present_perfect);
  CHECK(cluster_tense("He had eaten.") == Tense::past_perfect);
  CHECK(cluster_tense("He will have eaten.") == Tense::future_perfect);
  CHECK(cluster_tense("He will eat.") == Tense::future);
  CHECK(cluster_tense("He ate.") == Tense::past);
}

TEST_CASE("replace splices over chunk spans") {
  const Tagger& t = tagger();
  TaggedSentence s = t.analyze("There are two cats.");
  const Chunk& np = s.chunks[2];
  REQUIRE(np.num.has_value());
  TaggedSentence masked = replace(t, s, *np.num, "how many");
  CHECK(masked.surface() == "There are how many cats.");

  TaggedSentence swapped = replace(t, s, np.span, "a dog");
  CHECK(swapped.surface() == "There are a dog.");

  CHECK_THROWS_AS(replace(t, s, TokenSpan{1, 3}, "x"), std::domain_error);
}
