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
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fsvqa/types.hpp"

namespace fsvqa {

struct QuestionEntry {
  std::int64_t question_id = 0;
  std::int64_t image_id = 0;
  std::string question;
  Split split = Split::train;
};

struct AnnotationEntry {
  std::int64_t question_id = 0;
  std::vector<std::string> answers;  // exactly 10
  std::optional<std::string> question_type_hint;
};

struct CaptionEntry {
  std::int64_t caption_id = 0;
  std::int64_t image_id = 0;
  std::string caption;
};

struct QARecord {
  std::int64_t question_id = 0;
  std::int64_t image_id = 0;
  std::string question;
  std::string short_answer;
  QuestionCategory category = QuestionCategory::other;
  std::string full_answer;
  Provenance provenance = Provenance::converted_vqa;
  bool fallback = false;

  bool operator==(const QARecord&) const = default;
};

struct Dataset {
  std::vector<QARecord> records;
  Split split = Split::train;
  Version version = Version::regular;
};

struct VqaPair {
  QuestionEntry question;
  AnnotationEntry annotation;
};

struct LoadReport {
  std::size_t n_pairs = 0;
  std::size_t n_questions_without_annotations = 0;
  std::size_t n_annotations_without_questions = 0;
};

// Joins a VQA-style questions file with its annotations file on question_id.
// Unpaired entries are dropped and counted in `report`.
std::vector<VqaPair> load_vqa(const std::filesystem::path& questions_file,
                              const std::filesystem::path& annotations_file,
                              Split split, LoadReport* report = nullptr);

// COCO-style captions file.
std::vector<CaptionEntry> load_captions(const std::filesystem::path& file);

// Modal answer after normalization; ties broken by a seeded uniform draw
// over the tied set. Callers seed with (question_id XOR global seed) so the
// pick does not depend on processing order.
std::string select_answer(const std::vector<std::string>& answers,
                          std::uint64_t rng_seed);

// Provenance header written as the first line of every dataset file.
struct DatasetMeta {
  std::uint64_t seed = 0;
  std::map<std::string, std::string> input_digests;  // file name -> digest
};

// One JSON object per line: a header line, then the records in a fixed
// field order. The file is staged next to `out` and renamed into place so a
// failed write never leaves a partial file.
void write_dataset(const Dataset& d, const std::filesystem::path& out,
                   const DatasetMeta& meta = {});

Dataset read_dataset(const std::filesystem::path& in,
                     DatasetMeta* meta = nullptr);

// FNV-1a (64-bit) over the raw bytes of a file, as 16 hex digits.
std::string file_digest(const std::filesystem::path& file);

}  // namespace fsvqa
