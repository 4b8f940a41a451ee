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

#include "fsvqa/lexicon.hpp"

#include <fstream>
#include <sstream>

#include "fsvqa/text.hpp"

namespace fsvqa {

namespace {

std::vector<std::string> split_tsv(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == '\t') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

Lexicon Lexicon::load(const std::filesystem::path& dir) {
  Lexicon lex;

  const auto closed_path = dir / "closed_class.tsv";
  std::ifstream closed(closed_path);
  if (!closed) throw IoError("cannot open lexicon file " + closed_path.string());
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(closed, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto f = split_tsv(line);
    if (f.size() != 2 || f[0].empty())
      throw SchemaError(closed_path.string() + ":" + std::to_string(lineno) +
                        ": expected surface<TAB>tag");
    auto tag = tag_from_string(f[1]);
    if (!tag)
      throw SchemaError(closed_path.string() + ":" + std::to_string(lineno) +
                        ": unknown tag '" + f[1] + "'");
    lex.closed_.emplace(text::lower(f[0]), *tag);
  }

  const auto verbs_path = dir / "irregular_verbs.tsv";
  std::ifstream verbs(verbs_path);
  if (!verbs) throw IoError("cannot open lexicon file " + verbs_path.string());
  lineno = 0;
  while (std::getline(verbs, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto f = split_tsv(line);
    if (f.size() != 4 || f[0].empty() || f[1].empty() || f[2].empty() ||
        f[3].empty())
      throw SchemaError(verbs_path.string() + ":" + std::to_string(lineno) +
                        ": expected lemma<TAB>past<TAB>participle<TAB>3sg");
    VerbEntry e{text::lower(f[0]), text::lower(f[1]), text::lower(f[2]),
                text::lower(f[3])};
    std::size_t idx = lex.verbs_.size();
    if (lex.by_lemma_.count(e.lemma)) continue;
    lex.verbs_.push_back(e);
    lex.by_lemma_.emplace(e.lemma, idx);
    for (const std::string* form : {&e.lemma, &e.past, &e.participle, &e.third_sg})
      lex.by_form_.emplace(*form, idx);  // first entry wins on collisions
  }
  // "were" is not a column of the verb table but must resolve to "be".
  if (auto it = lex.by_lemma_.find("be"); it != lex.by_lemma_.end())
    lex.by_form_.emplace("were", it->second);

  return lex;
}

std::optional<Tag> Lexicon::closed_class(const std::string& lower_surface) const {
  auto it = closed_.find(lower_surface);
  if (it == closed_.end()) return std::nullopt;
  return it->second;
}

const VerbEntry* Lexicon::verb_by_lemma(const std::string& lemma) const {
  auto it = by_lemma_.find(lemma);
  return it == by_lemma_.end() ? nullptr : &verbs_[it->second];
}

const VerbEntry* Lexicon::verb_by_form(const std::string& lower_surface) const {
  auto it = by_form_.find(lower_surface);
  return it == by_form_.end() ? nullptr : &verbs_[it->second];
}

bool Lexicon::is_be_form(std::string_view w) {
  return w == "is" || w == "are" || w == "was" || w == "were" || w == "am" ||
         w == "be" || w == "been" || w == "being";
}

bool Lexicon::is_do_form(std::string_view w) {
  return w == "do" || w == "does" || w == "did";
}

bool Lexicon::is_have_form(std::string_view w) {
  return w == "have" || w == "has" || w == "had";
}

bool Lexicon::is_will_form(std::string_view w) {
  return w == "will" || w == "shall";
}

std::optional<std::string> Lexicon::subject_case(const std::string& lower) {
  if (lower == "them") return "they";
  if (lower == "him") return "he";
  if (lower == "me") return "I";
  if (lower == "us") return "we";
  return std::nullopt;
}

}  // namespace fsvqa
