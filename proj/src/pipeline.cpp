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

#include "fsvqa/pipeline.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "fsvqa/rng.hpp"

namespace fsvqa {

namespace {

// Runs fn(begin, end) on `workers` contiguous slices of [0, n). The first
// worker exception, if any, is rethrown after all threads join.
void parallel_slices(std::size_t n, int workers,
                     const std::function<void(std::size_t, std::size_t,
                                              int)>& fn) {
  int w = std::max(1, workers);
  if (w == 1 || n < 2) {
    fn(0, n, 0);
    return;
  }
  w = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(w), n));
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(w));
  std::size_t chunk = (n + static_cast<std::size_t>(w) - 1) /
                      static_cast<std::size_t>(w);
  for (int t = 0; t < w; ++t) {
    std::size_t begin = static_cast<std::size_t>(t) * chunk;
    std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&, begin, end, t] {
      try {
        fn(begin, end, t);
      } catch (...) {
        errors[static_cast<std::size_t>(t)] = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

void tally(ConvertSummary& s, const QARecord& r) {
  ++s.n_records;
  if (r.fallback) ++s.n_fallbacks;
  ++s.per_category[r.category];
}

}  // namespace

std::int64_t caption_question_id(std::int64_t caption_id, QaKind kind) {
  return kCaptionQidBase + caption_id * 8 + static_cast<std::int64_t>(kind);
}

Dataset Pipeline::convert_vqa(const std::vector<VqaPair>& pairs,
                              const PipelineOptions& opts,
                              ConvertSummary* summary) const {
  std::vector<const VqaPair*> ordered;
  ordered.reserve(pairs.size());
  for (const auto& p : pairs) ordered.push_back(&p);
  std::sort(ordered.begin(), ordered.end(), [](const auto* a, const auto* b) {
    return a->question.question_id < b->question.question_id;
  });

  std::vector<QARecord> records(ordered.size());
  parallel_slices(ordered.size(), opts.workers,
                  [&](std::size_t begin, std::size_t end, int) {
    for (std::size_t i = begin; i < end; ++i) {
      const VqaPair& p = *ordered[i];
      std::string ans = select_answer(
          p.annotation.answers,
          static_cast<std::uint64_t>(p.question.question_id) ^ opts.seed);
      Conversion conv = qa_.convert(p.question.question, ans);
      QARecord& r = records[i];
      r.question_id = p.question.question_id;
      r.image_id = p.question.image_id;
      r.question = p.question.question;
      r.short_answer = ans;
      r.category = conv.category;
      r.full_answer = conv.full_answer;
      r.provenance = Provenance::converted_vqa;
      r.fallback = conv.fallback;
    }
  });

  Dataset d;
  d.split = opts.split;
  d.version = Version::regular;
  d.records = std::move(records);
  if (summary) {
    *summary = {};
    for (const QARecord& r : d.records) tally(*summary, r);
  }
  return d;
}

Dataset Pipeline::convert_captions(const std::vector<CaptionEntry>& captions,
                                   const PipelineOptions& opts,
                                   ConvertSummary* summary) const {
  std::vector<const CaptionEntry*> ordered;
  ordered.reserve(captions.size());
  for (const auto& c : captions) ordered.push_back(&c);
  std::sort(ordered.begin(), ordered.end(), [](const auto* a, const auto* b) {
    return a->caption_id < b->caption_id;
  });

  std::vector<std::vector<CaptionQa>> generated(ordered.size());
  parallel_slices(ordered.size(), opts.workers,
                  [&](std::size_t begin, std::size_t end, int) {
    for (std::size_t i = begin; i < end; ++i) {
      const CaptionEntry& c = *ordered[i];
      auto qas = cap_.generate(
          c.caption,
          mix_seed(opts.seed, static_cast<std::uint64_t>(c.caption_id)));
      generated[i].reserve(qas.size());
      for (auto& qa : qas)
        generated[i].push_back(CaptionQa{c.caption_id, std::move(qa)});
    }
  });

  // Regroup per image (caption order preserved), then balance yes/no per
  // image before emitting records.
  std::map<std::int64_t, std::vector<CaptionQa>> by_image;
  std::size_t n_captionless = 0;
  std::size_t generated_total = 0;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    if (generated[i].empty()) {
      ++n_captionless;
      continue;
    }
    generated_total += generated[i].size();
    auto& bucket = by_image[ordered[i]->image_id];
    for (auto& qa : generated[i]) bucket.push_back(std::move(qa));
  }

  Dataset d;
  d.split = opts.split;
  d.version = Version::augmented;
  std::size_t kept_total = 0;
  for (auto& [image_id, qas] : by_image) {
    auto kept = balance_yes_no(image_id, std::move(qas));
    kept_total += kept.size();
    for (const CaptionQa& cq : kept) {
      QARecord r;
      r.question_id = caption_question_id(cq.caption_id, cq.qa.kind);
      r.image_id = image_id;
      r.question = cq.qa.question;
      r.short_answer = cq.qa.short_answer;
      switch (cq.qa.kind) {
        case QaKind::yes_affirm:
        case QaKind::no_substituted:
          r.category = QuestionCategory::yes_no;
          break;
        case QaKind::how_many:
          r.category = QuestionCategory::number;
          break;
        default:
          r.category = QuestionCategory::other;
      }
      r.full_answer = cq.qa.answer;
      r.provenance = Provenance::converted_caption;
      r.fallback = false;
      d.records.push_back(std::move(r));
    }
  }
  std::sort(d.records.begin(), d.records.end(),
            [](const QARecord& a, const QARecord& b) {
              return a.question_id < b.question_id;
            });

  if (summary) {
    *summary = {};
    summary->n_captions_without_qas = n_captionless;
    summary->n_balance_dropped = generated_total - kept_total;
    for (const QARecord& r : d.records) tally(*summary, r);
  }
  return d;
}

std::vector<ScoredPair> dataset_to_pairs(
    const Dataset& ground_truth,
    const std::map<std::int64_t, std::string>& candidates,
    const std::map<std::int64_t, std::vector<std::string>>* short_refs) {
  std::vector<ScoredPair> pairs;
  pairs.reserve(ground_truth.records.size());
  for (const QARecord& r : ground_truth.records) {
    ScoredPair p;
    p.question_id = r.question_id;
    auto it = candidates.find(r.question_id);
    p.candidate = it == candidates.end() ? std::string() : it->second;
    p.references.push_back(r.full_answer);
    if (short_refs) {
      auto sit = short_refs->find(r.question_id);
      if (sit != short_refs->end()) p.vqa_short_refs = sit->second;
    }
    if (!p.vqa_short_refs && r.provenance == Provenance::converted_vqa)
      p.vqa_short_refs = std::vector<std::string>(10, r.short_answer);
    pairs.push_back(std::move(p));
  }
  return pairs;
}

}  // namespace fsvqa
