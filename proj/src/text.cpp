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

#include "fsvqa/text.hpp"

#include <cctype>

namespace fsvqa::text {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)); }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }
bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)); }

bool is_punct_char(char c) {
  switch (c) {
    case '.': case ',': case '?': case '!': case ';': case ':':
    case '"': case '(': case ')': case '[': case ']': case '{': case '}':
      return true;
    default:
      return false;
  }
}

char to_lower(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}
char to_upper(char c) {
  return static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
}

// Splits trailing clitics off one whitespace-delimited word.
void split_word(const std::string& w, std::vector<std::string>& out) {
  if (w.empty()) return;
  std::string lw = lower(w);
  if (lw == "n't" || lw == "'s" || lw == "'re" || lw == "'ve" || lw == "'ll" ||
      lw == "'d" || lw == "'m") {
    out.push_back(w);
    return;
  }
  if (lw.size() > 3 && lw.ends_with("n't")) {
    std::string stem = w.substr(0, w.size() - 3);
    // "won't" and "shan't" do not leave a usable stem behind.
    if (lw == "won't") stem = w[0] == 'W' ? "Will" : "will";
    if (lw == "shan't") stem = w[0] == 'S' ? "Shall" : "shall";
    if (lw == "can't") stem = w.substr(0, 3);  // the "n" is shared
    out.push_back(stem);
    out.push_back("n't");
    return;
  }
  for (const char* cl : {"'s", "'re", "'ve", "'ll", "'d", "'m"}) {
    std::string suffix(cl);
    if (lw.size() > suffix.size() && lw.ends_with(suffix)) {
      out.push_back(w.substr(0, w.size() - suffix.size()));
      out.push_back(w.substr(w.size() - suffix.size()));
      return;
    }
  }
  out.push_back(w);
}

}  // namespace

std::vector<std::string> tokenize(std::string_view s) {
  std::vector<std::string> out;
  std::string word;
  auto flush = [&] {
    if (!word.empty()) {
      split_word(word, out);
      word.clear();
    }
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (is_space(c)) {
      flush();
    } else if (is_punct_char(c)) {
      flush();
      out.emplace_back(1, c);
    } else {
      word.push_back(c);
    }
  }
  flush();
  return out;
}

std::string detokenize(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (t.empty()) continue;
    bool attach = is_punct_token(t) || t[0] == '\'' ||
                  (t.size() >= 3 && lower(t) == "n't");
    if (!out.empty() && !attach && out.back() != '(') out.push_back(' ');
    out += t;
  }
  return out;
}

std::string normalize_answer(std::string_view s) {
  std::string t = trim(s);
  std::string out;
  bool prev_space = false;
  for (char c : t) {
    if (is_space(c)) {
      prev_space = true;
      continue;
    }
    if (prev_space && !out.empty()) out.push_back(' ');
    prev_space = false;
    out.push_back(to_lower(c));
  }
  while (!out.empty() && is_punct_char(out.back())) out.pop_back();
  while (!out.empty() && is_space(out.back())) out.pop_back();
  return out;
}

std::vector<std::string> metric_tokens(std::string_view s) {
  std::vector<std::string> out;
  std::string word;
  auto flush = [&] {
    if (!word.empty()) {
      out.push_back(word);
      word.clear();
    }
  };
  for (char c : s) {
    if (is_space(c)) {
      flush();
    } else if (is_alnum(c)) {
      word.push_back(to_lower(c));
    }
    // Other characters (punctuation, apostrophes, hyphens) are dropped.
  }
  flush();
  return out;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = to_lower(c);
  return out;
}

std::string capitalize(std::string s) {
  if (!s.empty() && is_alpha(s[0])) s[0] = to_upper(s[0]);
  return s;
}

std::string decapitalize(std::string s) {
  if (!s.empty() && is_alpha(s[0])) s[0] = to_lower(s[0]);
  return s;
}

bool is_punct_token(std::string_view t) {
  return t.size() == 1 && is_punct_char(t[0]);
}

bool is_all_digits(std::string_view t) {
  if (t.empty()) return false;
  for (char c : t)
    if (!is_digit(c)) return false;
  return true;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

bool contains_token_run(const std::vector<std::string>& hay,
                        const std::vector<std::string>& needle) {
  if (needle.empty() || needle.size() > hay.size()) return false;
  for (std::size_t i = 0; i + needle.size() <= hay.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < needle.size(); ++j) {
      if (hay[i + j] != needle[j]) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace fsvqa::text
