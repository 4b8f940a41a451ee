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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fsvqa/types.hpp"

namespace fsvqa {

struct ScoredPair {
  std::int64_t question_id = 0;
  std::string candidate;
  std::vector<std::string> references;  // at least one
  // The 10 short annotations, present only for VQA-derived questions.
  std::optional<std::vector<std::string>> vqa_short_refs;
};

struct EvalReport {
  std::array<double, 4> bleu = {0, 0, 0, 0};
  double meteor = 0.0;
  double cider = 0.0;
  double vqa_accuracy = 0.0;    // percent, over pairs with short refs
  double fsvqa_accuracy = 0.0;  // percent
  double exact_match = 0.0;     // percent, auxiliary to fsvqa_accuracy
};

// Classic Porter (1980) stemmer over a lowercase word.
std::string porter_stem(const std::string& word);

// Corpus BLEU-n: modified n-gram precision against the reference set,
// geometric mean over orders 1..n, brevity penalty exp(1 - r/c) when c < r
// with r the closest reference length. Throws SchemaError on an empty
// corpus.
double bleu(const std::vector<ScoredPair>& pairs, int n);

// Unigram-alignment score with an exact stage then a stem stage, recall
// weight 9, fragmentation penalty 0.5 * (chunks / matches)^3. Per pair the
// best reference counts; the corpus score is the plain mean.
double meteor(const std::vector<ScoredPair>& pairs);

// Plain TF-IDF n-gram cosine (n = 1..4, uniform weights, x10). One document
// per pair's reference set; a single-pair corpus degenerates to 0 idf.
double cider(const std::vector<ScoredPair>& pairs);

// Short-answer extraction accuracy over pairs carrying vqa_short_refs:
// extraction is the modal short reference when it occurs at a word boundary
// in the candidate, else the longest other reference present, else blank;
// per-item score min(matching refs / 3, 1). Result in percent.
double vqa_accuracy(const std::vector<ScoredPair>& pairs);

// Percent of pairs whose ground truth contains the candidate as a
// contiguous token run after normalization. Equality always counts.
double fsvqa_accuracy(const std::vector<ScoredPair>& pairs);

// Percent of pairs with normalized candidate == normalized ground truth.
double exact_match_rate(const std::vector<ScoredPair>& pairs);

EvalReport evaluate(const std::vector<ScoredPair>& pairs);

std::string report_to_json(const EvalReport& r);

// Per-item rows: question_id, fsvqa hit, exact match, vqa extraction and
// per-item vqa accuracy (blank for caption-derived pairs).
std::string per_item_csv(const std::vector<ScoredPair>& pairs);

}  // namespace fsvqa
