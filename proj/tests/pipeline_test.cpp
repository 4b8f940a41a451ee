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
#include <algorithm>
#include <set>

#include "doctest.h"
#include "fsvqa/pipeline.hpp"
#include "support/synth.hpp"

using namespace fsvqa;
using namespace fsvqa::testing;

namespace {

const Pipeline& pipeline() {
  static Lexicon lex = Lexicon::load(FSVQA_DATA_DIR);
  static SubstitutionLists lists = SubstitutionLists::load(
      std::filesystem::path(FSVQA_DATA_DIR) / "agents.txt",
      std::filesystem::path(FSVQA_DATA_DIR) / "actions.txt");
  static CategoryLexicons categories = CategoryLexicons::load(
      std::filesystem::path(FSVQA_DATA_DIR) / "categories.tsv");
  static Pipeline p(lex, lists, categories);
  return p;
}

}  // namespace

TEST_CASE("vqa conversion fills records in question order") {
  auto pairs = synth_vqa_pairs(64);
  ConvertSummary summary;
  Dataset d = pipeline().convert_vqa(pairs, {.seed = 7, .workers = 2},
                                     &summary);
  REQUIRE(d.records.size() == 64);
  CHECK(summary.n_records == 64);
  CHECK(summary.n_fallbacks == 0);
  CHECK(d.version == Version::regular);
  for (std::size_t i = 1; i < d.records.size(); ++i)
    CHECK(d.records[i - 1].question_id < d.records[i].question_id);
  for (const auto& r : d.records) {
    CHECK_FALSE(r.fallback);
    CHECK(r.provenance == Provenance::converted_vqa);
    CHECK_FALSE(r.full_answer.empty());
    unsigned char head = static_cast<unsigned char>(r.full_answer[0]);
    CHECK((std::isupper(head) || std::isdigit(head)));
    CHECK(r.full_answer.back() == '.');
  }
  std::size_t cat_total = 0;
  for (const auto& [cat, n] : summary.per_category) cat_total += n;
  CHECK(cat_total == 64);
}

TEST_CASE("worker count does not change vqa output") {
  auto pairs = synth_vqa_pairs(200);
  Dataset one = pipeline().convert_vqa(pairs, {.seed = 11, .workers = 1});
  Dataset four = pipeline().convert_vqa(pairs, {.seed = 11, .workers = 4});
  Dataset eight = pipeline().convert_vqa(pairs, {.seed = 11, .workers = 8});
  CHECK(one.records == four.records);
  CHECK(one.records == eight.records);
}

TEST_CASE("input order does not change vqa output") {
  auto pairs = synth_vqa_pairs(50);
  Dataset a = pipeline().convert_vqa(pairs, {.seed = 3, .workers = 2});
  std::reverse(pairs.begin(), pairs.end());
  Dataset b = pipeline().convert_vqa(pairs, {.seed = 3, .workers = 2});
  CHECK(a.records == b.records);
}

TEST_CASE("the seed steers tie answer selection only") {
  // Split annotations 5/5 so the modal answer is a tie.
  auto pairs = synth_vqa_pairs(20);
  for (auto& p : pairs) {
    p.annotation.answers.assign(5, "yes");
    p.annotation.answers.resize(10, "no");
  }
  Dataset a = pipeline().convert_vqa(pairs, {.seed = 1, .workers = 1});
  Dataset b = pipeline().convert_vqa(pairs, {.seed = 2, .workers = 1});
  bool any_diff = false;
  for (std::size_t i = 0; i < a.records.size(); ++i)
    if (a.records[i].short_answer != b.records[i].short_answer)
      any_diff = true;
  CHECK(any_diff);

  // Unanimous annotations are seed independent.
  auto fixed = synth_vqa_pairs(20);
  Dataset c = pipeline().convert_vqa(fixed, {.seed = 1, .workers = 1});
  Dataset d = pipeline().convert_vqa(fixed, {.seed = 2, .workers = 1});
  CHECK(c.records == d.records);
}

TEST_CASE("caption question ids are disjoint from vqa ids and ordered by kind") {
  CHECK(caption_question_id(0, QaKind::yes_affirm) == kCaptionQidBase);
  CHECK(caption_question_id(0, QaKind::wh_where) == kCaptionQidBase + 6);
  CHECK(caption_question_id(1, QaKind::yes_affirm) == kCaptionQidBase + 8);
  CHECK(caption_question_id(12, QaKind::how_many) ==
        kCaptionQidBase + 12 * 8 + 2);

  auto caps = synth_captions(40);
  Dataset d = pipeline().convert_captions(caps, {.seed = 5, .workers = 2});
  REQUIRE(!d.records.empty());
  for (const auto& r : d.records) {
    CHECK(r.question_id >= kCaptionQidBase);
    CHECK(r.provenance == Provenance::converted_caption);
    std::int64_t cid = (r.question_id - kCaptionQidBase) / 8;
    CHECK(cid >= 1);
    CHECK(cid <= 40);
  }
  for (std::size_t i = 1; i < d.records.size(); ++i)
    CHECK(d.records[i - 1].question_id < d.records[i].question_id);
}

TEST_CASE("worker count does not change caption output") {
  auto caps = synth_captions(60);
  Dataset one = pipeline().convert_captions(caps, {.seed = 9, .workers = 1});
  Dataset four = pipeline().convert_captions(caps, {.seed = 9, .workers = 4});
  CHECK(one.records == four.records);
}

TEST_CASE("caption seeds are per caption") {
  auto caps = synth_captions(30);
  Dataset a = pipeline().convert_captions(caps, {.seed = 1, .workers = 1});
  Dataset b = pipeline().convert_captions(caps, {.seed = 2, .workers = 1});
  // Substituted questions change with the seed. A substitution can also fail
  // to produce a grammatical negative under one seed but not another, so the
  // record sets need not match; compare per question id.
  std::map<std::int64_t, const QARecord*> by_qid_a, by_qid_b;
  for (const auto& r : a.records) by_qid_a[r.question_id] = &r;
  for (const auto& r : b.records) by_qid_b[r.question_id] = &r;
  std::size_t diffs = 0, shared = 0;
  for (const auto& [qid, ra] : by_qid_a) {
    auto it = by_qid_b.find(qid);
    if (ra->category != QuestionCategory::yes_no) {
      // Non-substituted output is seed independent.
      REQUIRE(it != by_qid_b.end());
      CHECK(ra->question == it->second->question);
      CHECK(ra->full_answer == it->second->full_answer);
      continue;
    }
    if (it == by_qid_b.end()) continue;
    ++shared;
    if (ra->question != it->second->question) ++diffs;
  }
  CHECK(shared > 0);
  CHECK(diffs > 0);
}

TEST_CASE("caption conversion balances polarity per image") {
  auto caps = synth_captions(1000, 2);  // 500 images
  ConvertSummary summary;
  Dataset d =
      pipeline().convert_captions(caps, {.seed = 42, .workers = 4}, &summary);
  CHECK(summary.n_records == d.records.size());

  std::map<std::int64_t, std::pair<int, int>> per_image;  // yes, no
  std::size_t yes_total = 0, no_total = 0;
  for (const auto& r : d.records) {
    if (r.category != QuestionCategory::yes_no) continue;
    bool affirmative = r.short_answer == "yes";
    auto& [y, n] = per_image[r.image_id];
    (affirmative ? y : n) += 1;
    (affirmative ? yes_total : no_total) += 1;
  }
  REQUIRE(!per_image.empty());
  for (const auto& [image, counts] : per_image) {
    CAPTURE(image);
    CHECK(counts.first >= 1);
    CHECK(counts.second >= 1);
  }
  // Roughly even overall: alternation keeps the global ratio near half.
  double ratio = static_cast<double>(yes_total) /
                 static_cast<double>(yes_total + no_total);
  CHECK(ratio > 0.4);
  CHECK(ratio < 0.6);
  CHECK(summary.n_balance_dropped > 0);
}

TEST_CASE("captions the grammar cannot parse are counted") {
  std::vector<CaptionEntry> caps = synth_captions(4);
  caps.push_back(CaptionEntry{99, 50, "Blue quickly seven the."});
  ConvertSummary summary;
  Dataset d =
      pipeline().convert_captions(caps, {.seed = 1, .workers = 1}, &summary);
  CHECK(summary.n_captions_without_qas == 1);
  for (const auto& r : d.records) {
    std::int64_t cid = (r.question_id - kCaptionQidBase) / 8;
    CHECK(cid != 99);
  }
}

TEST_CASE("dataset_to_pairs wires candidates and references") {
  auto pairs = synth_vqa_pairs(6);
  Dataset d = pipeline().convert_vqa(pairs, {.seed = 1, .workers = 1});

  std::map<std::int64_t, std::string> candidates;
  for (const auto& r : d.records) candidates[r.question_id] = r.full_answer;
  candidates.erase(d.records[2].question_id);  // one missing answer

  auto scored = dataset_to_pairs(d, candidates);
  REQUIRE(scored.size() == 6);
  for (std::size_t i = 0; i < scored.size(); ++i) {
    CHECK(scored[i].question_id == d.records[i].question_id);
    REQUIRE(scored[i].references.size() == 1);
    CHECK(scored[i].references[0] == d.records[i].full_answer);
    REQUIRE(scored[i].vqa_short_refs.has_value());
    CHECK(scored[i].vqa_short_refs->size() == 10);
    CHECK(scored[i].vqa_short_refs->front() == d.records[i].short_answer);
  }
  CHECK(scored[2].candidate.empty());
  CHECK(scored[3].candidate == d.records[3].full_answer);

  // Supplied short references win over the synthesized ones.
  std::map<std::int64_t, std::vector<std::string>> short_refs;
  short_refs[d.records[0].question_id] =
      std::vector<std::string>(10, "override");
  auto scored2 = dataset_to_pairs(d, candidates, &short_refs);
  CHECK(scored2[0].vqa_short_refs->front() == "override");
  CHECK(scored2[1].vqa_short_refs->front() == d.records[1].short_answer);

  // Caption-derived records carry no short refs.
  auto caps = synth_captions(4);
  Dataset cd = pipeline().convert_captions(caps, {.seed = 1, .workers = 1});
  std::map<std::int64_t, std::string> cc;
  auto cap_scored = dataset_to_pairs(cd, cc);
  REQUIRE(!cap_scored.empty());
  for (const auto& p : cap_scored) CHECK_FALSE(p.vqa_short_refs.has_value());
}

TEST_CASE("self evaluation of a converted dataset is perfect") {
  auto pairs = synth_vqa_pairs(48);
  Dataset d = pipeline().convert_vqa(pairs, {.seed = 21, .workers = 2});
  std::map<std::int64_t, std::string> candidates;
  for (const auto& r : d.records) candidates[r.question_id] = r.full_answer;
  auto scored = dataset_to_pairs(d, candidates);
  EvalReport r = evaluate(scored);
  CHECK(r.fsvqa_accuracy == doctest::Approx(100.0));
  CHECK(r.exact_match == doctest::Approx(100.0));
  CHECK(r.vqa_accuracy == doctest::Approx(100.0));
  for (double b : r.bleu) CHECK(b == doctest::Approx(1.0));
}
