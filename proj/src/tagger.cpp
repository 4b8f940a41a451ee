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

#include "fsvqa/tagger.hpp"

#include <cctype>

#include "fsvqa/text.hpp"

namespace fsvqa {

namespace {

bool starts_upper(const std::string& s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s[0]));
}

bool ends_with(const std::string& s, std::string_view suf) {
  return s.size() >= suf.size() &&
         s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

}  // namespace

std::string_view to_string(ChunkKind k) {
  switch (k) {
    case ChunkKind::NP: return "NP";
    case ChunkKind::VP: return "VP";
    case ChunkKind::MD: return "MD";
    case ChunkKind::EX: return "EX";
    case ChunkKind::WH: return "WH";
    case ChunkKind::IN_PP: return "IN_PP";
    case ChunkKind::JJ: return "JJ";
    case ChunkKind::NUM: return "NUM";
  }
  return "?";
}

std::string TaggedSentence::surface(TokenSpan s) const {
  std::vector<std::string> parts;
  for (int i = s.begin; i < s.end && i < static_cast<int>(tokens.size()); ++i)
    parts.push_back(tokens[i].surface);
  return text::detokenize(parts);
}

std::string TaggedSentence::surface() const {
  return surface({0, static_cast<int>(tokens.size())});
}

int TaggedSentence::content_end() const {
  int e = static_cast<int>(tokens.size());
  while (e > 0 && tokens[e - 1].tag == Tag::PUNCT) --e;
  return e;
}

std::vector<std::string> Tagger::tokenize(std::string_view s) {
  return text::tokenize(s);
}

std::vector<Token> Tagger::tag(const std::vector<std::string>& raw) const {
  std::vector<Token> toks;
  toks.reserve(raw.size());

  for (std::size_t i = 0; i < raw.size(); ++i) {
    const std::string& w = raw[i];
    std::string lw = text::lower(w);
    Token t;
    t.surface = w;

    // Clitic "'s" after a wh-word or pronoun is a contracted copula.
    if (lw == "'s" && i > 0) {
      std::string prev = text::lower(raw[i - 1]);
      if (prev == "what" || prev == "who" || prev == "where" || prev == "how" ||
          prev == "there" || prev == "that" || prev == "it" || prev == "he" ||
          prev == "she") {
        t.surface = "is";
        t.tag = Tag::VBZ;
        toks.push_back(t);
        continue;
      }
    }

    if (text::is_punct_token(w)) {
      t.tag = Tag::PUNCT;
    } else if (text::is_all_digits(w)) {
      t.tag = Tag::CD;
    } else if (auto fixed = lex_.closed_class(lw)) {
      t.tag = *fixed;
    } else if (const VerbEntry* v = lex_.verb_by_form(lw)) {
      if (lw == v->third_sg && lw != v->lemma) t.tag = Tag::VBZ;
      else if (lw == v->past) t.tag = Tag::VBD;
      else if (lw == v->lemma) t.tag = Tag::VB;  // "run" over VBN reading
      else if (lw == v->participle) t.tag = Tag::VBN;
      else t.tag = Tag::VB;
    } else if (i > 0 && starts_upper(w)) {
      t.tag = Tag::NNP;
    } else if (ends_with(lw, "ing") && lw.size() > 4) {
      t.tag = Tag::VBG;
    } else if (ends_with(lw, "ed") && lw.size() > 3) {
      t.tag = Tag::VBD;
    } else if (ends_with(lw, "ly") && lw.size() > 3) {
      t.tag = Tag::RB;
    } else if (ends_with(lw, "s") && lw.size() > 3 && !ends_with(lw, "ss") &&
               !ends_with(lw, "us") && !ends_with(lw, "is")) {
      t.tag = Tag::NNS;
    } else {
      t.tag = Tag::NN;
    }
    toks.push_back(t);
  }

  repair(toks);
  return toks;
}

void Tagger::repair(std::vector<Token>& toks) const {
  const int n = static_cast<int>(toks.size());
  auto lower_at = [&](int i) { return text::lower(toks[i].surface); };

  // Pass 1: verbs directly after a determiner-like word act as nouns.
  for (int i = 1; i < n; ++i) {
    Tag prev = toks[i - 1].tag;
    bool det_like = prev == Tag::DT || prev == Tag::PRPS || prev == Tag::CD ||
                    prev == Tag::JJ;
    if (!det_like) continue;
    Tag& t = toks[i].tag;
    if (t == Tag::VB || t == Tag::VBP || t == Tag::VBZ) {
      t = (t == Tag::VBZ) ? Tag::NNS : Tag::NN;
    } else if (t == Tag::VBG) {
      // "a painting of ..." but not "a man painting ...".
      Tag next = (i + 1 < n) ? toks[i + 1].tag : Tag::PUNCT;
      if (next == Tag::IN || next == Tag::PUNCT || is_verb_tag(next))
        t = Tag::NN;
    }
  }

  // Pass 2: base form after a modal, "to", or a do-auxiliary (possibly with
  // an intervening subject), covering "would like" and "does he like".
  // Unknown words misread as nouns ("cross") flip too, except after "to"
  // where a bare noun is a real possibility ("go to school").
  for (int i = 1; i < n; ++i) {
    Tag prev = toks[i - 1].tag;
    bool to_ctx = prev == Tag::TO;
    bool base_ctx = prev == Tag::MD;
    if (!base_ctx && !to_ctx && i >= 2) {
      std::string p2 = lower_at(i - 2);
      base_ctx = (Lexicon::is_do_form(p2) || toks[i - 2].tag == Tag::MD) &&
                 (prev == Tag::PRP || prev == Tag::NN || prev == Tag::NNS ||
                  prev == Tag::NNP);
    }
    if (!base_ctx && !to_ctx && i >= 3 && is_noun_tag(prev)) {
      // Fronted auxiliary with a determiner-phrase subject: "did a dog ...",
      // "would the big dog ...". Walk back over the subject run.
      int k = i - 1;
      while (k > 0 && (is_noun_tag(toks[k].tag) || toks[k].tag == Tag::JJ ||
                       toks[k].tag == Tag::CD))
        --k;
      if (k > 0 && (toks[k].tag == Tag::DT || toks[k].tag == Tag::PRPS)) --k;
      base_ctx = k == 0 && (Lexicon::is_do_form(lower_at(0)) ||
                            toks[0].tag == Tag::MD);
    }
    if (!base_ctx && !to_ctx) continue;
    Tag& t = toks[i].tag;
    if (t == Tag::VBD || t == Tag::VBZ || t == Tag::VBP || t == Tag::IN) {
      if (t == Tag::IN && lower_at(i) != "like") continue;
      t = Tag::VB;
    } else if (t == Tag::NN && base_ctx) {
      t = Tag::VB;
    }
  }

  // Pass 3: past forms after "be" or "have" are participles, and so are
  // ambiguous base forms after "have" ("has run"). A subject may intervene
  // in questions ("has he run").
  for (int i = 1; i < n; ++i) {
    std::string prev = lower_at(i - 1);
    bool aux_prev = Lexicon::is_be_form(prev) || Lexicon::is_have_form(prev);
    bool have_prev = Lexicon::is_have_form(prev);
    if (!aux_prev && i >= 2 &&
        (toks[i - 1].tag == Tag::PRP || is_noun_tag(toks[i - 1].tag))) {
      std::string p2 = lower_at(i - 2);
      if (Lexicon::is_have_form(p2)) aux_prev = have_prev = true;
    }
    if (toks[i].tag == Tag::VBD && aux_prev) {
      toks[i].tag = Tag::VBN;
    } else if (toks[i].tag == Tag::VB && have_prev) {
      const VerbEntry* v = lex_.verb_by_form(lower_at(i));
      if (v && lower_at(i) == v->participle) toks[i].tag = Tag::VBN;
    }
  }

  // Pass 4: past forms after a form of "get" are participles ("get hurt").
  for (int i = 1; i < n; ++i) {
    if (toks[i].tag != Tag::VBD) continue;
    const VerbEntry* v = lex_.verb_by_form(lower_at(i - 1));
    if (v && v->lemma == "get") toks[i].tag = Tag::VBN;
  }

  // Pass 5: a base form after a plural subject is a finite present verb
  // ("dogs run", "they play"), unless a fronted auxiliary licensed the base
  // form ("do dogs run").
  for (int i = 1; i < n; ++i) {
    if (toks[i].tag != Tag::VB) continue;
    Tag prev = toks[i - 1].tag;
    std::string plw = lower_at(i - 1);
    bool plural_subject =
        prev == Tag::NNS ||
        (prev == Tag::PRP && (plw == "i" || plw == "you" || plw == "we" ||
                              plw == "they"));
    if (!plural_subject) continue;
    if (i >= 2 &&
        (Lexicon::is_do_form(lower_at(i - 2)) || toks[i - 2].tag == Tag::MD))
      continue;
    toks[i].tag = Tag::VBP;
  }

  // Pass 6: -s nouns directly after a pronoun subject are finite verbs, and
  // after a noun subject only when the stem is a known verb.
  for (int i = 1; i < n; ++i) {
    if (toks[i].tag != Tag::NNS) continue;
    Tag prev = toks[i - 1].tag;
    std::string lw = lower_at(i);
    if (prev == Tag::PRP) {
      toks[i].tag = Tag::VBZ;
    } else if (prev == Tag::NN || prev == Tag::NNP) {
      const VerbEntry* v = lex_.verb_by_form(lw);
      if (v && lw == v->third_sg) toks[i].tag = Tag::VBZ;
    }
  }
}

TaggedSentence Tagger::chunk(std::vector<Token> tokens) const {
  TaggedSentence s;
  s.tokens = std::move(tokens);
  const int n = static_cast<int>(s.tokens.size());
  s.terminal = Terminal::declarative;
  for (int i = n - 1; i >= 0; --i) {
    if (s.tokens[i].tag != Tag::PUNCT) break;
    if (s.tokens[i].surface == "?") {
      s.terminal = Terminal::question;
      break;
    }
  }

  auto lower_at = [&](int i) { return text::lower(s.tokens[i].surface); };
  auto tag_at = [&](int i) { return s.tokens[i].tag; };

  // Absorbs one noun-phrase run starting at i; returns its end (== i when no
  // NP starts there). Records a numeral sub-span when one is present.
  auto absorb_np = [&](int i, std::optional<TokenSpan>& num, int& head) {
    int j = i;
    num.reset();
    head = -1;
    if (tag_at(j) == Tag::PRP) {
      head = j;
      return j + 1;
    }
    int num_begin = -1, num_end = -1;
    bool saw_modifier = false;
    while (j < n) {
      Tag t = tag_at(j);
      if (t == Tag::DT || t == Tag::PRPS || t == Tag::JJ) {
        ++j;
        saw_modifier = true;
      } else if (t == Tag::CD) {
        if (num_begin < 0) num_begin = j;
        num_end = j + 1;
        ++j;
        saw_modifier = true;
      } else {
        break;
      }
    }
    int noun_begin = j;
    while (j < n && is_noun_tag(tag_at(j))) {
      head = j;
      ++j;
    }
    if (noun_begin == j && !saw_modifier) return i;  // nothing here
    if (num_begin >= 0 && num_end == noun_begin)
      num = TokenSpan{num_begin, num_end};
    return j;
  };

  int i = 0;
  while (i < n) {
    Tag t = tag_at(i);
    if (t == Tag::PUNCT) {
      ++i;
      continue;
    }

    if (i == 0 && is_wh_tag(t)) {
      int end = i + 1;
      if (lower_at(i) == "how" && end < n && lower_at(end) == "many") ++end;
      s.chunks.push_back({ChunkKind::WH, {i, end}, i, std::nullopt, false});
      i = end;
      continue;
    }

    if (t == Tag::EX) {
      s.chunks.push_back({ChunkKind::EX, {i, i + 1}, i, std::nullopt, false});
      ++i;
      continue;
    }

    if (t == Tag::MD) {
      s.chunks.push_back({ChunkKind::MD, {i, i + 1}, i, std::nullopt, false});
      ++i;
      continue;
    }

    if (is_verb_tag(t)) {
      int j = i;
      while (j < n) {
        Tag tj = tag_at(j);
        if (is_verb_tag(tj)) {
          ++j;
        } else if (tj == Tag::RB && j + 1 < n && is_verb_tag(tag_at(j + 1))) {
          ++j;  // "is not going"
        } else if (tj == Tag::TO && j + 1 < n && tag_at(j + 1) == Tag::VB) {
          ++j;  // "like to eat"
        } else {
          break;
        }
      }
      s.chunks.push_back({ChunkKind::VP, {i, j}, i, std::nullopt, false});
      i = j;
      continue;
    }

    if (t == Tag::IN || t == Tag::TO) {
      std::optional<TokenSpan> num;
      int head;
      int j = (i + 1 < n) ? absorb_np(i + 1, num, head) : i + 1;
      if (j > i + 1) {
        s.chunks.push_back({ChunkKind::IN_PP, {i, j}, i, std::nullopt, false});
        i = j;
        continue;
      }
      ++i;  // stranded preposition stays unchunked
      continue;
    }

    if (t == Tag::DT || t == Tag::PRPS || t == Tag::JJ || t == Tag::CD ||
        is_noun_tag(t) || t == Tag::PRP) {
      std::optional<TokenSpan> num;
      int head;
      int j = absorb_np(i, num, head);
      if (j == i) {
        ++i;
        continue;
      }
      bool has_noun = head >= 0;
      if (!has_noun) {
        // Modifier-only run: classify by what it contains.
        bool only_cd = true, any_jj = false, any_dt = false;
        for (int k = i; k < j; ++k) {
          if (tag_at(k) != Tag::CD) only_cd = false;
          if (tag_at(k) == Tag::JJ) any_jj = true;
          if (tag_at(k) == Tag::DT || tag_at(k) == Tag::PRPS) any_dt = true;
        }
        if (only_cd) {
          s.chunks.push_back({ChunkKind::NUM, {i, j}, i, std::nullopt, false});
        } else if (any_dt) {
          // Bare determiner acting as a pronoun ("this", "those").
          s.chunks.push_back({ChunkKind::NP, {i, j}, j - 1, std::nullopt, false});
        } else if (any_jj) {
          s.chunks.push_back({ChunkKind::JJ, {i, j}, i, std::nullopt, false});
        }
        i = j;
        continue;
      }
      Chunk np{ChunkKind::NP, {i, j}, head, num, false};
      // Conjoined noun phrases merge into one plural-valued chunk.
      while (j < n && tag_at(j) == Tag::CC &&
             (lower_at(j) == "and" || lower_at(j) == "or")) {
        std::optional<TokenSpan> num2;
        int head2;
        int k = (j + 1 < n) ? absorb_np(j + 1, num2, head2) : j + 1;
        if (k > j + 1 && head2 >= 0) {
          np.span.end = k;
          np.head = head2;
          np.conjoined = true;
          j = k;
        } else {
          break;
        }
      }
      s.chunks.push_back(np);
      i = j;
      continue;
    }

    ++i;  // RB, CC, UH and friends stay unchunked
  }

  return s;
}

TaggedSentence Tagger::analyze(std::string_view sentence) const {
  return chunk(tag(tokenize(sentence)));
}

TaggedSentence Tagger::main_clause(const TaggedSentence& s) const {
  const int n = static_cast<int>(s.tokens.size());
  if (n == 0) return s;

  int begin = 0;
  int end = n;

  if (text::lower(s.tokens[0].surface) == "if") {
    for (int i = 1; i < n; ++i) {
      if (s.tokens[i].surface == ",") {
        begin = i + 1;
        break;
      }
    }
  }

  // ", A or B ?" choice tail: last comma whose remainder contains "or".
  int content_end = s.content_end();
  int last_comma = -1;
  for (int i = begin; i < content_end; ++i)
    if (s.tokens[i].surface == ",") last_comma = i;
  if (last_comma > begin) {
    bool has_or = false;
    for (int i = last_comma + 1; i < content_end; ++i)
      if (text::lower(s.tokens[i].surface) == "or") has_or = true;
    if (has_or) end = last_comma;
  }

  if (begin == 0 && end == n) return s;

  std::vector<std::string> kept;
  for (int i = begin; i < end && i < content_end; ++i)
    kept.push_back(s.tokens[i].surface);
  for (int i = content_end; i < n; ++i) kept.push_back(s.tokens[i].surface);

  return chunk(tag(kept));
}

std::optional<std::vector<const Chunk*>> covering_chunks(
    const TaggedSentence& s) {
  const int end = s.content_end();
  std::vector<const Chunk*> out;
  int pos = 0;
  for (const Chunk& c : s.chunks) {
    if (c.span.begin != pos || c.span.end > end) return std::nullopt;
    out.push_back(&c);
    pos = c.span.end;
  }
  if (pos != end || out.empty()) return std::nullopt;
  return out;
}

}  // namespace fsvqa
