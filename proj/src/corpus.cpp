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

#include "fsvqa/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <unordered_map>
#include <unordered_set>

#include "fsvqa/rng.hpp"
#include "fsvqa/text.hpp"
#include "json.hpp"

namespace fsvqa {

namespace {

using ordered_json = nlohmann::ordered_json;

nlohmann::json parse_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw IoError("cannot open " + file.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw IngestError(file, e.byte, e.what());
  }
}

const nlohmann::json& require(const nlohmann::json& obj, const char* key,
                              const std::filesystem::path& file) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null())
    throw SchemaError(file.string() + ": missing field \"" +
                      std::string(key) + "\"");
  return *it;
}

std::int64_t require_int(const nlohmann::json& obj, const char* key,
                         const std::filesystem::path& file) {
  const auto& v = require(obj, key, file);
  if (!v.is_number_integer())
    throw SchemaError(file.string() + ": field \"" + std::string(key) +
                      "\" is not an integer");
  return v.get<std::int64_t>();
}

std::string require_str(const nlohmann::json& obj, const char* key,
                        const std::filesystem::path& file) {
  const auto& v = require(obj, key, file);
  if (!v.is_string())
    throw SchemaError(file.string() + ": field \"" + std::string(key) +
                      "\" is not a string");
  return v.get<std::string>();
}

template <typename T>
T parse_enum(std::optional<T> parsed, const std::string& raw,
             const std::string& where) {
  if (!parsed) throw SchemaError(where + ": unknown value \"" + raw + "\"");
  return *parsed;
}

}  // namespace

std::vector<VqaPair> load_vqa(const std::filesystem::path& questions_file,
                              const std::filesystem::path& annotations_file,
                              Split split, LoadReport* report) {
  nlohmann::json qdoc = parse_file(questions_file);
  nlohmann::json adoc = parse_file(annotations_file);

  const auto& qarr = require(qdoc, "questions", questions_file);
  const auto& aarr = require(adoc, "annotations", annotations_file);
  if (!qarr.is_array())
    throw SchemaError(questions_file.string() + ": \"questions\" is not an array");
  if (!aarr.is_array())
    throw SchemaError(annotations_file.string() +
                      ": \"annotations\" is not an array");

  std::unordered_map<std::int64_t, AnnotationEntry> annotations;
  annotations.reserve(aarr.size());
  for (const auto& a : aarr) {
    AnnotationEntry e;
    e.question_id = require_int(a, "question_id", annotations_file);
    const auto& answers = require(a, "answers", annotations_file);
    if (!answers.is_array() || answers.size() != 10)
      throw SchemaError(annotations_file.string() + ": question " +
                        std::to_string(e.question_id) +
                        ": expected exactly 10 answers");
    for (const auto& ans : answers) {
      std::string text = require_str(ans, "answer", annotations_file);
      if (text::trim(text).empty())
        throw SchemaError(annotations_file.string() + ": question " +
                          std::to_string(e.question_id) + ": empty answer");
      e.answers.push_back(std::move(text));
    }
    if (auto it = a.find("question_type"); it != a.end() && it->is_string())
      e.question_type_hint = it->get<std::string>();
    std::int64_t qid = e.question_id;
    if (!annotations.emplace(qid, std::move(e)).second)
      throw SchemaError(annotations_file.string() + ": duplicate question_id " +
                        std::to_string(qid));
  }

  std::vector<VqaPair> pairs;
  pairs.reserve(qarr.size());
  std::unordered_set<std::int64_t> seen;
  std::unordered_set<std::int64_t> joined;
  LoadReport rep;
  for (const auto& q : qarr) {
    QuestionEntry e;
    e.question_id = require_int(q, "question_id", questions_file);
    e.image_id = require_int(q, "image_id", questions_file);
    e.question = require_str(q, "question", questions_file);
    e.split = split;
    if (text::trim(e.question).empty())
      throw SchemaError(questions_file.string() + ": question " +
                        std::to_string(e.question_id) + ": empty question");
    if (!seen.insert(e.question_id).second)
      throw SchemaError(questions_file.string() + ": duplicate question_id " +
                        std::to_string(e.question_id));
    auto it = annotations.find(e.question_id);
    if (it == annotations.end()) {
      ++rep.n_questions_without_annotations;
      continue;
    }
    joined.insert(e.question_id);
    pairs.push_back(VqaPair{std::move(e), it->second});
  }
  rep.n_annotations_without_questions = annotations.size() - joined.size();
  rep.n_pairs = pairs.size();
  if (report) *report = rep;
  return pairs;
}

std::vector<CaptionEntry> load_captions(const std::filesystem::path& file) {
  nlohmann::json doc = parse_file(file);
  const auto& arr = require(doc, "annotations", file);
  if (!arr.is_array())
    throw SchemaError(file.string() + ": \"annotations\" is not an array");

  std::vector<CaptionEntry> captions;
  captions.reserve(arr.size());
  std::unordered_set<std::int64_t> seen;
  for (const auto& c : arr) {
    CaptionEntry e;
    e.caption_id = require_int(c, "id", file);
    e.image_id = require_int(c, "image_id", file);
    e.caption = require_str(c, "caption", file);
    if (text::trim(e.caption).empty())
      throw SchemaError(file.string() + ": caption " +
                        std::to_string(e.caption_id) + ": empty caption");
    if (!seen.insert(e.caption_id).second)
      throw SchemaError(file.string() + ": duplicate caption id " +
                        std::to_string(e.caption_id));
    captions.push_back(std::move(e));
  }
  return captions;
}

std::string select_answer(const std::vector<std::string>& answers,
                          std::uint64_t rng_seed) {
  std::unordered_map<std::string, int> counts;
  for (const auto& a : answers) ++counts[text::normalize_answer(a)];

  int best = 0;
  for (const auto& [_, n] : counts) best = std::max(best, n);

  std::vector<std::string> tied;
  for (const auto& [form, n] : counts)
    if (n == best) tied.push_back(form);
  if (tied.size() == 1) return tied.front();

  std::sort(tied.begin(), tied.end());
  SplitMix rng(rng_seed);
  return tied[rng.below(tied.size())];
}

namespace {

constexpr const char* kFormat = "fsvqa-dataset";
constexpr int kFormatVersion = 1;

ordered_json record_to_json(const QARecord& r) {
  ordered_json j;
  j["question_id"] = r.question_id;
  j["image_id"] = r.image_id;
  j["question"] = r.question;
  j["short_answer"] = r.short_answer;
  j["category"] = to_string(r.category);
  j["full_answer"] = r.full_answer;
  j["provenance"] = to_string(r.provenance);
  j["fallback"] = r.fallback;
  return j;
}

QARecord record_from_json(const nlohmann::json& j,
                          const std::filesystem::path& file) {
  QARecord r;
  r.question_id = require_int(j, "question_id", file);
  r.image_id = require_int(j, "image_id", file);
  r.question = require_str(j, "question", file);
  r.short_answer = require_str(j, "short_answer", file);
  r.category = parse_enum(category_from_string(require_str(j, "category", file)),
                          j["category"].get<std::string>(),
                          file.string() + ": category");
  r.full_answer = require_str(j, "full_answer", file);
  r.provenance = parse_enum(
      provenance_from_string(require_str(j, "provenance", file)),
      j["provenance"].get<std::string>(), file.string() + ": provenance");
  const auto& fb = require(j, "fallback", file);
  if (!fb.is_boolean())
    throw SchemaError(file.string() + ": field \"fallback\" is not a boolean");
  r.fallback = fb.get<bool>();
  return r;
}

}  // namespace

void write_dataset(const Dataset& d, const std::filesystem::path& out,
                   const DatasetMeta& meta) {
  ordered_json header;
  header["format"] = kFormat;
  header["format_version"] = kFormatVersion;
  header["tool_version"] = kToolVersion;
  header["seed"] = meta.seed;
  header["split"] = to_string(d.split);
  header["version"] = to_string(d.version);
  header["input_digests"] = ordered_json::object();
  for (const auto& [name, digest] : meta.input_digests)
    header["input_digests"][name] = digest;

  std::filesystem::path tmp = out;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open " + tmp.string() + " for writing");
    os << header.dump() << '\n';
    for (const QARecord& r : d.records) os << record_to_json(r).dump() << '\n';
    os.flush();
    if (!os) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw IoError("write failed: " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, out, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move " + tmp.string() + " to " + out.string());
  }
}

Dataset read_dataset(const std::filesystem::path& in, DatasetMeta* meta) {
  std::ifstream is(in, std::ios::binary);
  if (!is) throw IoError("cannot open " + in.string());

  std::string line;
  if (!std::getline(is, line))
    throw SchemaError(in.string() + ": empty dataset file");

  nlohmann::json header;
  try {
    header = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw IngestError(in, e.byte, e.what());
  }
  if (!header.is_object() || require_str(header, "format", in) != kFormat)
    throw SchemaError(in.string() + ": not a dataset file");
  if (require_int(header, "format_version", in) != kFormatVersion)
    throw SchemaError(in.string() + ": unsupported format_version");

  Dataset d;
  d.split = parse_enum(split_from_string(require_str(header, "split", in)),
                       header["split"].get<std::string>(),
                       in.string() + ": split");
  d.version = parse_enum(version_from_string(require_str(header, "version", in)),
                         header["version"].get<std::string>(),
                         in.string() + ": version");
  if (meta) {
    meta->seed = static_cast<std::uint64_t>(
        header.value("seed", std::uint64_t{0}));
    meta->input_digests.clear();
    if (auto it = header.find("input_digests");
        it != header.end() && it->is_object()) {
      for (const auto& [name, digest] : it->items())
        meta->input_digests[name] = digest.get<std::string>();
    }
  }

  std::size_t offset = line.size() + 1;
  while (std::getline(is, line)) {
    if (line.empty()) {
      ++offset;
      continue;
    }
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw IngestError(in, offset + e.byte, e.what());
    }
    d.records.push_back(record_from_json(j, in));
    offset += line.size() + 1;
  }
  return d;
}

std::string file_digest(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw IoError("cannot open " + file.string());
  std::uint64_t h = 14695981039346656037ULL;
  char buf[1 << 16];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 1099511628211ULL;
    }
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(h));
  return std::string(hex);
}

}  // namespace fsvqa
