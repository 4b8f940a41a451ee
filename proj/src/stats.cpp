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

#include "fsvqa/stats.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "fsvqa/text.hpp"
#include "json.hpp"

namespace fsvqa {

CorpusStats compute_stats(const Dataset& d, std::size_t k) {
  if (d.records.empty()) throw SchemaError("compute_stats: empty dataset");

  CorpusStats s;
  s.n_pairs = d.records.size();
  s.top_k = k;

  std::unordered_map<std::string, std::size_t> answer_counts;
  std::unordered_set<std::string> words;
  std::map<int, std::size_t> length_counts;
  std::size_t total_words = 0;

  for (const QARecord& r : d.records) {
    ++answer_counts[r.full_answer];
    auto toks = text::metric_tokens(r.full_answer);
    total_words += toks.size();
    ++length_counts[static_cast<int>(toks.size())];
    for (auto& w : toks) words.insert(std::move(w));
  }

  s.n_unique_answers = answer_counts.size();
  s.n_unique_words = words.size();
  s.avg_answer_len = static_cast<double>(total_words) / s.n_pairs;

  // Top-k coverage: k most frequent answers, count ties broken by surface
  // order so the cut is deterministic.
  std::vector<std::pair<std::string, std::size_t>> by_freq(
      answer_counts.begin(), answer_counts.end());
  std::sort(by_freq.begin(), by_freq.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::size_t covered = 0;
  for (std::size_t i = 0; i < by_freq.size() && i < k; ++i)
    covered += by_freq[i].second;
  s.top_k_coverage = 100.0 * static_cast<double>(covered) / s.n_pairs;

  for (const auto& [len, n] : length_counts)
    s.length_histogram[len] = 100.0 * static_cast<double>(n) / s.n_pairs;

  s.per_category_unique = category_counts(d);
  return s;
}

std::map<QuestionCategory, std::size_t> category_counts(const Dataset& d) {
  std::map<QuestionCategory, std::unordered_set<std::string>> sets;
  for (const QARecord& r : d.records) sets[r.category].insert(r.full_answer);
  std::map<QuestionCategory, std::size_t> out;
  out[QuestionCategory::yes_no] = sets[QuestionCategory::yes_no].size();
  out[QuestionCategory::number] = sets[QuestionCategory::number].size();
  out[QuestionCategory::other] = sets[QuestionCategory::other].size();
  return out;
}

std::string stats_to_json(const CorpusStats& s) {
  nlohmann::ordered_json j;
  j["n_pairs"] = s.n_pairs;
  j["avg_answer_len"] = s.avg_answer_len;
  j["n_unique_answers"] = s.n_unique_answers;
  j["n_unique_words"] = s.n_unique_words;
  j["top_k"] = s.top_k;
  j["top_k_coverage"] = s.top_k_coverage;
  j["per_category_unique"] = nlohmann::ordered_json::object();
  for (const auto& [cat, n] : s.per_category_unique)
    j["per_category_unique"][to_string(cat)] = n;
  j["length_histogram"] = nlohmann::ordered_json::object();
  for (const auto& [len, pct] : s.length_histogram)
    j["length_histogram"][std::to_string(len)] = pct;
  return j.dump(2);
}

std::string histogram_to_csv(const CorpusStats& s) {
  std::ostringstream os;
  os << "answer_length,percent\n";
  for (const auto& [len, pct] : s.length_histogram)
    os << len << ',' << pct << '\n';
  return os.str();
}

}  // namespace fsvqa
