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

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "fsvqa/pipeline.hpp"
#include "fsvqa/stats.hpp"
#include "json.hpp"

namespace {

using namespace fsvqa;

#ifndef FSVQA_DEFAULT_DATA_DIR
#define FSVQA_DEFAULT_DATA_DIR "data"
#endif

std::filesystem::path data_root(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("FSVQA_DATA_DIR"); env && *env)
    return env;
  return FSVQA_DEFAULT_DATA_DIR;
}

struct CommonOpts {
  std::uint64_t seed = 0;
  std::string split = "train";
  int workers = 1;
  std::string lexicons;  // directory; empty = data root
  std::string agents;    // file; empty = <data root>/agents.txt
  std::string actions;   // file; empty = <data root>/actions.txt
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_out = true) {
  cmd->add_option("--seed", o.seed, "Seed for all randomized choices");
  cmd->add_option("--split", o.split, "Dataset split")
      ->check(CLI::IsMember({"train", "val"}));
  cmd->add_option("--workers", o.workers, "Worker thread count")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--lexicons", o.lexicons,
                  "Directory with closed_class.tsv, irregular_verbs.tsv and "
                  "categories.tsv");
  cmd->add_option("--agents", o.agents, "Object class list (1000 lines)");
  cmd->add_option("--actions", o.actions, "Action class list (121 lines)");
  if (with_out)
    cmd->add_option("--out", o.out, "Output file")->required();
}

struct Engines {
  Lexicon lexicon;
  SubstitutionLists lists;
  CategoryLexicons categories;
};

Engines load_engines(const CommonOpts& o) {
  std::filesystem::path root = data_root(o.lexicons);
  std::filesystem::path agents =
      o.agents.empty() ? data_root("") / "agents.txt"
                       : std::filesystem::path(o.agents);
  std::filesystem::path actions =
      o.actions.empty() ? data_root("") / "actions.txt"
                        : std::filesystem::path(o.actions);
  return Engines{
      Lexicon::load(root),
      SubstitutionLists::load(agents, actions),
      CategoryLexicons::load(root / "categories.tsv"),
  };
}

PipelineOptions pipeline_opts(const CommonOpts& o) {
  PipelineOptions opts;
  opts.seed = o.seed;
  opts.split = o.split == "val" ? Split::val : Split::train;
  opts.workers = o.workers;
  return opts;
}

void write_text_atomic(const std::filesystem::path& out,
                       const std::string& content) {
  std::filesystem::path tmp = out;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open " + tmp.string() + " for writing");
    os << content;
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

void print_summary(const ConvertSummary& s, const LoadReport* load) {
  std::cout << "records: " << s.n_records << "\n"
            << "fallbacks: " << s.n_fallbacks << "\n";
  for (const auto& [cat, n] : s.per_category)
    std::cout << to_string(cat) << ": " << n << "\n";
  if (load) {
    std::cout << "questions without annotations: "
              << load->n_questions_without_annotations << "\n"
              << "annotations without questions: "
              << load->n_annotations_without_questions << "\n";
  }
  if (s.n_captions_without_qas || s.n_balance_dropped) {
    std::cout << "captions without questions: " << s.n_captions_without_qas
              << "\n"
              << "dropped by yes/no balancing: " << s.n_balance_dropped
              << "\n";
  }
}

int cmd_convert_vqa(const CommonOpts& o, const std::string& questions,
                    const std::string& annotations) {
  Engines eng = load_engines(o);
  Pipeline pipeline(eng.lexicon, eng.lists, eng.categories);
  PipelineOptions opts = pipeline_opts(o);

  LoadReport load;
  auto pairs = load_vqa(questions, annotations, opts.split, &load);
  ConvertSummary summary;
  Dataset d = pipeline.convert_vqa(pairs, opts, &summary);

  DatasetMeta meta;
  meta.seed = o.seed;
  meta.input_digests[std::filesystem::path(questions).filename().string()] =
      file_digest(questions);
  meta.input_digests[std::filesystem::path(annotations).filename().string()] =
      file_digest(annotations);
  write_dataset(d, o.out, meta);
  print_summary(summary, &load);
  return 0;
}

int cmd_convert_captions(const CommonOpts& o, const std::string& captions,
                         bool augment, const std::string& questions,
                         const std::string& annotations) {
  Engines eng = load_engines(o);
  Pipeline pipeline(eng.lexicon, eng.lists, eng.categories);
  PipelineOptions opts = pipeline_opts(o);

  auto entries = load_captions(captions);
  if (entries.empty())
    throw SchemaError(captions + ": captions file has no captions");

  ConvertSummary summary;
  Dataset d = pipeline.convert_captions(entries, opts, &summary);

  DatasetMeta meta;
  meta.seed = o.seed;
  meta.input_digests[std::filesystem::path(captions).filename().string()] =
      file_digest(captions);

  LoadReport load;
  bool have_load = false;
  if (augment) {
    if (questions.empty() || annotations.empty())
      throw SchemaError(
          "--augment needs --questions and --annotations to merge the "
          "converted records");
    auto pairs = load_vqa(questions, annotations, opts.split, &load);
    have_load = true;
    ConvertSummary vqa_summary;
    Dataset reg = pipeline.convert_vqa(pairs, opts, &vqa_summary);
    summary.n_records += vqa_summary.n_records;
    summary.n_fallbacks += vqa_summary.n_fallbacks;
    for (const auto& [cat, n] : vqa_summary.per_category)
      summary.per_category[cat] += n;
    d.records.insert(d.records.end(),
                     std::make_move_iterator(reg.records.begin()),
                     std::make_move_iterator(reg.records.end()));
    std::sort(d.records.begin(), d.records.end(),
              [](const QARecord& a, const QARecord& b) {
                return a.question_id < b.question_id;
              });
    meta.input_digests[std::filesystem::path(questions).filename().string()] =
        file_digest(questions);
    meta.input_digests[std::filesystem::path(annotations).filename().string()] =
        file_digest(annotations);
  }

  write_dataset(d, o.out, meta);
  print_summary(summary, have_load ? &load : nullptr);
  return 0;
}

int cmd_stats(const std::string& dataset, std::size_t top_k,
              const std::string& out, const std::string& csv) {
  Dataset d = read_dataset(dataset);
  CorpusStats s = compute_stats(d, top_k);
  std::string json = stats_to_json(s);
  if (out.empty())
    std::cout << json << "\n";
  else
    write_text_atomic(out, json + "\n");
  if (!csv.empty()) write_text_atomic(csv, histogram_to_csv(s));
  return 0;
}

std::map<std::int64_t, std::string> load_results(
    const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw IoError("cannot open " + file.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw IngestError(file, e.byte, e.what());
  }
  auto it = doc.find("results");
  if (it == doc.end() || !it->is_array())
    throw SchemaError(file.string() + ": expected a \"results\" array");
  std::map<std::int64_t, std::string> out;
  for (const auto& r : *it) {
    if (!r.contains("question_id") || !r["question_id"].is_number_integer() ||
        !r.contains("answer") || !r["answer"].is_string())
      throw SchemaError(file.string() +
                        ": each result needs question_id and answer");
    out[r["question_id"].get<std::int64_t>()] = r["answer"].get<std::string>();
  }
  return out;
}

std::map<std::int64_t, std::vector<std::string>> load_short_refs(
    const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw IoError("cannot open " + file.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw IngestError(file, e.byte, e.what());
  }
  auto it = doc.find("annotations");
  if (it == doc.end() || !it->is_array())
    throw SchemaError(file.string() + ": expected an \"annotations\" array");
  std::map<std::int64_t, std::vector<std::string>> out;
  for (const auto& a : *it) {
    std::vector<std::string> answers;
    for (const auto& ans : a["answers"])
      answers.push_back(ans["answer"].get<std::string>());
    out[a["question_id"].get<std::int64_t>()] = std::move(answers);
  }
  return out;
}

int cmd_evaluate(const std::string& dataset, const std::string& results,
                 const std::string& annotations, const std::string& out,
                 const std::string& csv) {
  Dataset d = read_dataset(dataset);
  auto candidates = load_results(results);

  std::map<std::int64_t, std::vector<std::string>> short_refs;
  const std::map<std::int64_t, std::vector<std::string>>* refs_ptr = nullptr;
  if (!annotations.empty()) {
    short_refs = load_short_refs(annotations);
    refs_ptr = &short_refs;
  }

  auto pairs = dataset_to_pairs(d, candidates, refs_ptr);
  EvalReport report = evaluate(pairs);
  std::string json = report_to_json(report);
  if (out.empty())
    std::cout << json << "\n";
  else
    write_text_atomic(out, json + "\n");
  if (!csv.empty()) write_text_atomic(csv, per_item_csv(pairs));
  return 0;
}

int cmd_dump_rules() {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ConversionRule& r : QaConverter::rules()) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["category"] = to_string(r.category);
    j["pattern"] = r.pattern;
    j["production"] = r.production;
    arr.push_back(std::move(j));
  }
  std::cout << arr.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fsvqa: build and score full-sentence VQA datasets"};
  app.require_subcommand(0, 1);

  bool dump_rules_flag = false;
  app.add_flag("--dump-rules", dump_rules_flag,
               "Print the question conversion rule table and exit");

  CommonOpts vqa_opts;
  std::string vqa_questions, vqa_annotations;
  CLI::App* convert_vqa =
      app.add_subcommand("convert-vqa", "Convert short VQA answers into "
                                        "full-sentence answers");
  convert_vqa->add_option("--questions", vqa_questions, "VQA questions JSON")
      ->required();
  convert_vqa
      ->add_option("--annotations", vqa_annotations, "VQA annotations JSON")
      ->required();
  add_common(convert_vqa, vqa_opts);

  CommonOpts cap_opts;
  std::string cap_captions, cap_questions, cap_annotations;
  bool cap_augment = false;
  CLI::App* convert_captions = app.add_subcommand(
      "convert-captions", "Generate QA pairs from image captions");
  convert_captions->add_option("--captions", cap_captions, "Captions JSON")
      ->required();
  convert_captions->add_flag(
      "--augment", cap_augment,
      "Also convert --questions/--annotations and merge into one dataset");
  convert_captions->add_option("--questions", cap_questions,
                               "VQA questions JSON (with --augment)");
  convert_captions->add_option("--annotations", cap_annotations,
                               "VQA annotations JSON (with --augment)");
  add_common(convert_captions, cap_opts);

  std::string stats_in, stats_out, stats_csv;
  std::size_t stats_k = 1000;
  CLI::App* stats = app.add_subcommand("stats", "Corpus statistics report");
  stats->add_option("dataset", stats_in, "Dataset file")->required();
  stats->add_option("--top-k", stats_k, "Answer coverage cut");
  stats->add_option("--out", stats_out, "JSON report file (default stdout)");
  stats->add_option("--csv", stats_csv, "Length histogram CSV file");

  std::string eval_data, eval_results, eval_annotations, eval_out, eval_csv;
  CLI::App* evaluate_cmd =
      app.add_subcommand("evaluate", "Score candidate answers against a "
                                     "dataset");
  evaluate_cmd->add_option("dataset", eval_data, "Ground-truth dataset file")
      ->required();
  evaluate_cmd
      ->add_option("results", eval_results,
                   "Results JSON: {\"results\":[{question_id, answer}]}")
      ->required();
  evaluate_cmd->add_option("--annotations", eval_annotations,
                           "Original annotations for true 10-way short refs");
  evaluate_cmd->add_option("--out", eval_out, "JSON report file");
  evaluate_cmd->add_option("--csv", eval_csv, "Per-item CSV file");

  CLI::App* dump =
      app.add_subcommand("dump-rules", "Print the conversion rule table");

  CLI11_PARSE(app, argc, argv);

  try {
    if (dump_rules_flag || dump->parsed()) return cmd_dump_rules();
    if (convert_vqa->parsed())
      return cmd_convert_vqa(vqa_opts, vqa_questions, vqa_annotations);
    if (convert_captions->parsed())
      return cmd_convert_captions(cap_opts, cap_captions, cap_augment,
                                  cap_questions, cap_annotations);
    if (stats->parsed())
      return cmd_stats(stats_in, stats_k, stats_out, stats_csv);
    if (evaluate_cmd->parsed())
      return cmd_evaluate(eval_data, eval_results, eval_annotations, eval_out,
                          eval_csv);
    std::cout << app.help();
    return 0;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
