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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsvqa/morph.hpp"
#include "fsvqa/tagger.hpp"
#include "fsvqa/types.hpp"

namespace fsvqa {

// One row of the compiled-in rewrite grammar, in the order rules are tried.
// `pattern` and `production` are the human-readable forms used by the
// dump-rules listing.
struct ConversionRule {
  std::string id;
  QuestionCategory category;
  std::string pattern;
  std::string production;
};

struct Conversion {
  std::string full_answer;
  QuestionCategory category = QuestionCategory::other;
  bool fallback = false;
  std::string rule_id;  // empty for fallback outputs
};

// Rewrites (question, short answer) pairs into declarative full-sentence
// answers by pattern-matching the question's chunk sequence against a fixed
// rule table, first match wins.
class QaConverter {
 public:
  QaConverter(const Tagger& tagger, const Morph& morph)
      : tagger_(tagger), morph_(morph) {}

  QuestionCategory classify(const TaggedSentence& q) const;

  // Category-specific engines. Empty result means no rule matched; the
  // caller decides on fallback handling.
  std::optional<Conversion> convert_yes_no(const TaggedSentence& q,
                                           const std::string& ans) const;
  std::optional<Conversion> convert_number(const TaggedSentence& q,
                                           const std::string& ans) const;
  std::optional<Conversion> convert_other(const TaggedSentence& q,
                                          const std::string& ans) const;

  // Full pipeline for one pair: main-clause reduction, classification,
  // rule matching, fallback. Never throws on well-formed text.
  Conversion convert(std::string_view question,
                     std::string_view short_answer) const;

  static const std::vector<ConversionRule>& rules();

  const Tagger& tagger() const { return tagger_; }
  const Morph& morph() const { return morph_; }

 private:
  const Tagger& tagger_;
  const Morph& morph_;
};

}  // namespace fsvqa
