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

#include <string>
#include <string_view>

#include "fsvqa/lexicon.hpp"
#include "fsvqa/tagger.hpp"

namespace fsvqa {

enum class Tense {
  past,
  present,
  future,
  past_perfect,
  present_perfect,
  future_perfect,
};
const char* to_string(Tense t);

enum class PersonNumber { sing3, other };

// A verb (or adjective) occurrence prepared for conjugation.
struct VerbForm {
  std::string lemma;
  std::string surface;
  Tag form_tag = Tag::VB;
};

class Morph {
 public:
  explicit Morph(const Lexicon& lex) : lex_(lex) {}

  // Builds a VerbForm from a token, resolving the lemma through the verb
  // table or by regular de-inflection.
  VerbForm verb_form(const Token& t) const;
  std::string lemma_of(const std::string& surface, Tag tag) const;

  // Tense of a finite verb or modal. Throws std::domain_error on any other
  // input.
  Tense tense(const VerbForm& v) const;

  // Tense of a verb cluster such as "will have eaten" or "had gone".
  Tense tense_of_cluster(const TaggedSentence& s, TokenSpan cluster) const;

  // Finite form of a verb for the given tense and subject agreement.
  // Adjective inputs (JJ) pass through unchanged. A VBG input is rebuilt as
  // a progressive with the matching form of "be".
  std::string conjug(const VerbForm& v, Tense t, PersonNumber subject) const;

  // Negated finite form: auxiliaries and modals take a following "not",
  // lexical verbs take do-support ("got" -> "did not get").
  std::string negate(const VerbForm& v, Tense t,
                     PersonNumber subject = PersonNumber::other) const;

  std::string be_form(Tense t, PersonNumber subject) const;
  std::string do_form(Tense t, PersonNumber subject) const;

  std::string third_sg(const std::string& lemma) const;
  std::string past(const std::string& lemma) const;
  std::string participle(const std::string& lemma) const;

  static PersonNumber subject_number(const TaggedSentence& s, const Chunk& np);

 private:
  const Lexicon& lex_;
};

// Splices `replacement` over one chunk of `s` (a listed chunk span or the
// numeral sub-span of an NP) and re-analyzes. Throws std::domain_error when
// `target` is not a chunk of `s`.
TaggedSentence replace(const Tagger& tagger, const TaggedSentence& s,
                       TokenSpan target, std::string_view replacement);

}  // namespace fsvqa
