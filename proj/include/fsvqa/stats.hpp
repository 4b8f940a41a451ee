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

#include <map>
#include <string>

#include "fsvqa/corpus.hpp"

namespace fsvqa {

struct CorpusStats {
  std::size_t n_pairs = 0;
  double avg_answer_len = 0.0;  // words, punctuation excluded
  std::size_t n_unique_answers = 0;
  std::size_t n_unique_words = 0;
  std::size_t top_k = 0;
  double top_k_coverage = 0.0;  // percent of pairs covered by top-k answers
  std::map<QuestionCategory, std::size_t> per_category_unique;
  std::map<int, double> length_histogram;  // word count -> percent of pairs
};

// Throws SchemaError on an empty dataset. Uniqueness of answers is exact,
// case-sensitive surface match; word counts ignore punctuation.
CorpusStats compute_stats(const Dataset& d, std::size_t k = 1000);

std::map<QuestionCategory, std::size_t> category_counts(const Dataset& d);

std::string stats_to_json(const CorpusStats& s);

// Length distribution as "answer_length,percent" rows.
std::string histogram_to_csv(const CorpusStats& s);

}  // namespace fsvqa
