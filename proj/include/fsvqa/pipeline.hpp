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
#include <map>

#include "fsvqa/cap2qa.hpp"
#include "fsvqa/corpus.hpp"
#include "fsvqa/metrics.hpp"
#include "fsvqa/qa2full.hpp"

namespace fsvqa {

struct PipelineOptions {
  std::uint64_t seed = 0;
  Split split = Split::train;
  int workers = 1;
};

struct ConvertSummary {
  std::size_t n_records = 0;
  std::size_t n_fallbacks = 0;
  std::map<QuestionCategory, std::size_t> per_category;
  std::size_t n_captions_without_qas = 0;    // caption runs only
  std::size_t n_balance_dropped = 0;         // caption runs only
};

// Caption-derived records live in a dedicated question_id range so they can
// never collide with VQA ids.
constexpr std::int64_t kCaptionQidBase = 10'000'000'000;

std::int64_t caption_question_id(std::int64_t caption_id, QaKind kind);

// Owns the rule engines and fans conversion out over worker threads. Output
// is sorted by question_id, so it does not depend on the worker count.
class Pipeline {
 public:
  Pipeline(const Lexicon& lex, const SubstitutionLists& lists,
           const CategoryLexicons& categories)
      : tagger_(lex),
        morph_(lex),
        qa_(tagger_, morph_),
        cap_(tagger_, morph_, qa_, lists, categories) {}

  Dataset convert_vqa(const std::vector<VqaPair>& pairs,
                      const PipelineOptions& opts,
                      ConvertSummary* summary = nullptr) const;

  Dataset convert_captions(const std::vector<CaptionEntry>& captions,
                           const PipelineOptions& opts,
                           ConvertSummary* summary = nullptr) const;

  const Tagger& tagger() const { return tagger_; }
  const Morph& morph() const { return morph_; }
  const QaConverter& qa_converter() const { return qa_; }
  const CaptionConverter& caption_converter() const { return cap_; }

 private:
  Tagger tagger_;
  Morph morph_;
  QaConverter qa_;
  CaptionConverter cap_;
};

// Builds metric inputs from a ground-truth dataset and a candidate map.
// Records without a candidate score against the empty string. Short
// references come from `short_refs` when provided, otherwise VQA-derived
// records fall back to 10 copies of their stored short answer.
std::vector<ScoredPair> dataset_to_pairs(
    const Dataset& ground_truth,
    const std::map<std::int64_t, std::string>& candidates,
    const std::map<std::int64_t, std::vector<std::string>>* short_refs =
        nullptr);

}  // namespace fsvqa
