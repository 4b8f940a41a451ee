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
#include <vector>

namespace fsvqa::text {

// Whitespace/punctuation tokenizer. Splits punctuation into single-character
// tokens and splits contractions ("isn't" -> "is", "n't"; "man's" -> "man",
// "'s"). Original casing is preserved. Idempotent over its own output joined
// with spaces.
std::vector<std::string> tokenize(std::string_view s);

// Joins tokens with spaces, attaching punctuation and clitics to the
// preceding token ("he , is n't" -> "he, isn't" style spacing; clitics keep
// their apostrophe form).
std::string detokenize(const std::vector<std::string>& tokens);

// Lowercase, trim, collapse internal whitespace, strip terminal punctuation.
// Used to normalize short answers before voting and category checks.
std::string normalize_answer(std::string_view s);

// Metric-side normalizer: lowercase, remove punctuation characters, split on
// whitespace. Candidates and references always pass through this one
// function so containment checks are consistent.
std::vector<std::string> metric_tokens(std::string_view s);

std::string lower(std::string_view s);

// Uppercases the first character when it is a letter; digits and other
// leading characters are left alone so strings like "3 people ..." survive.
std::string capitalize(std::string s);
std::string decapitalize(std::string s);

bool is_punct_token(std::string_view t);
bool is_all_digits(std::string_view t);

std::string trim(std::string_view s);

// True when `needle` occurs in `hay` as a contiguous token run.
bool contains_token_run(const std::vector<std::string>& hay,
                        const std::vector<std::string>& needle);

}  // namespace fsvqa::text
