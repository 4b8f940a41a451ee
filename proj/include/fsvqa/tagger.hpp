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

#include "fsvqa/lexicon.hpp"
#include "fsvqa/tags.hpp"

namespace fsvqa {

struct Token {
  std::string surface;
  Tag tag = Tag::NN;
};

// Half-open token index range [begin, end).
struct TokenSpan {
  int begin = 0;
  int end = 0;
  int size() const { return end - begin; }
  bool empty() const { return end <= begin; }
  bool operator==(const TokenSpan&) const = default;
};

enum class ChunkKind { NP, VP, MD, EX, WH, IN_PP, JJ, NUM };
std::string_view to_string(ChunkKind k);

// Flat, non-recursive phrase span. `num` marks a numeral run inside an NP
// ("2 pens" carries num over the "2").
struct Chunk {
  ChunkKind kind;
  TokenSpan span;
  int head = 0;
  std::optional<TokenSpan> num;
  bool conjoined = false;  // "a cat and a dog"
};

enum class Terminal { question, declarative };

struct TaggedSentence {
  std::vector<Token> tokens;
  std::vector<Chunk> chunks;
  Terminal terminal = Terminal::declarative;

  std::string surface(TokenSpan s) const;
  std::string surface() const;  // whole sentence, detokenized
  // Index just past the last content token (excludes terminal punctuation).
  int content_end() const;
};

// Deterministic rule tagger: fixed lexicon lookup, verb-table lookup, suffix
// heuristics for unknown words, then a fixed series of contextual repairs.
class Tagger {
 public:
  explicit Tagger(const Lexicon& lex) : lex_(lex) {}

  static std::vector<std::string> tokenize(std::string_view s);

  std::vector<Token> tag(const std::vector<std::string>& tokens) const;
  TaggedSentence chunk(std::vector<Token> tokens) const;
  TaggedSentence analyze(std::string_view sentence) const;

  // Drops a leading "if ...," clause and a trailing ", A or B" choice list,
  // then re-analyzes. Returns the input unchanged when neither is present.
  TaggedSentence main_clause(const TaggedSentence& s) const;

  const Lexicon& lexicon() const { return lex_; }

 private:
  void repair(std::vector<Token>& toks) const;
  const Lexicon& lex_;
};

// Chunk pointers in order when the chunks tile every content token with no
// stranded tokens in between; empty optional otherwise. Rule matching is
// restricted to fully covered sentences.
std::optional<std::vector<const Chunk*>> covering_chunks(
    const TaggedSentence& s);

}  // namespace fsvqa
