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

#include "fsvqa/qa2full.hpp"

#include "fsvqa/text.hpp"

namespace fsvqa {

namespace {

using Chunks = std::vector<const Chunk*>;

const Token& first_token(const TaggedSentence& s, const Chunk& c) {
  return s.tokens[c.span.begin];
}

bool is_finite_aux(const Token& t) {
  if (t.tag != Tag::VBZ && t.tag != Tag::VBP && t.tag != Tag::VBD)
    return false;
  std::string lw = text::lower(t.surface);
  return Lexicon::is_be_form(lw) || Lexicon::is_do_form(lw) ||
         Lexicon::is_have_form(lw);
}

bool vp_single(const Chunk& c) {
  return c.kind == ChunkKind::VP && c.span.size() == 1;
}

bool vp_single_aux(const TaggedSentence& s, const Chunk& c) {
  return vp_single(c) && is_finite_aux(first_token(s, c));
}

bool vp_single_be(const TaggedSentence& s, const Chunk& c) {
  return vp_single(c) &&
         Lexicon::is_be_form(text::lower(first_token(s, c).surface));
}

bool wh_first(const TaggedSentence& s, const Chunks& cs, Tag wanted) {
  return cs[0]->kind == ChunkKind::WH && first_token(s, *cs[0]).tag == wanted;
}

bool wh_wp_or_wdt(const TaggedSentence& s, const Chunks& cs) {
  return wh_first(s, cs, Tag::WP) || wh_first(s, cs, Tag::WDT);
}

bool wh_how_many(const TaggedSentence& s, const Chunks& cs) {
  const Chunk& c = *cs[0];
  return c.kind == ChunkKind::WH && c.span.size() == 2 &&
         text::lower(first_token(s, c).surface) == "how";
}

Chunks tail(const Chunks& cs, std::size_t from) {
  return Chunks(cs.begin() + static_cast<long>(from), cs.end());
}

bool rest_no_verb(const Chunks& rest) {
  for (const Chunk* c : rest)
    if (c->kind == ChunkKind::VP || c->kind == ChunkKind::MD) return false;
  return true;
}

bool rest_pp_only(const Chunks& rest) {
  for (const Chunk* c : rest)
    if (c->kind != ChunkKind::IN_PP) return false;
  return true;
}

// Collects output tokens and assembles the final declarative sentence.
class Emitter {
 public:
  explicit Emitter(const TaggedSentence& s) : s_(s) {}

  void token(int idx) {
    const Token& t = s_.tokens[idx];
    // A token copied from the front of the question loses its positional
    // capitalization; proper nouns and "I" keep theirs.
    if (idx == 0 && t.tag != Tag::NNP && t.surface != "I")
      out_.push_back(text::decapitalize(t.surface));
    else
      out_.push_back(t.surface);
  }

  void span(TokenSpan sp) {
    for (int i = sp.begin; i < sp.end; ++i) token(i);
  }

  void chunk(const Chunk& c) { span(c.span); }

  // Subject position: object pronouns flip to subject case.
  void subject(const Chunk& c) {
    if (c.kind == ChunkKind::NP && c.span.size() == 1) {
      const Token& t = first_token(s_, c);
      if (t.tag == Tag::PRP) {
        if (auto subj = Lexicon::subject_case(text::lower(t.surface))) {
          out_.push_back(*subj);
          return;
        }
      }
    }
    chunk(c);
  }

  void word(std::string_view phrase) {
    for (auto& w : text::tokenize(phrase)) out_.push_back(std::move(w));
  }

  void rest(const Chunks& cs) {
    for (const Chunk* c : cs) chunk(*c);
  }

  // prefix "Yes"/"No" renders as a leading "Yes, "; empty prefix instead
  // capitalizes the body.
  std::string sentence(std::string_view prefix) const {
    std::vector<std::string> toks;
    if (!prefix.empty()) {
      toks.emplace_back(prefix);
      toks.emplace_back(",");
    }
    toks.insert(toks.end(), out_.begin(), out_.end());
    toks.emplace_back(".");
    std::string body = text::detokenize(toks);
    return prefix.empty() ? text::capitalize(std::move(body)) : body;
  }

 private:
  const TaggedSentence& s_;
  std::vector<std::string> out_;
};

Conversion make(const Emitter& e, std::string_view prefix,
                QuestionCategory cat, const char* rule_id) {
  Conversion c;
  c.full_answer = e.sentence(prefix);
  c.category = cat;
  c.rule_id = rule_id;
  return c;
}

}  // namespace

QuestionCategory QaConverter::classify(const TaggedSentence& q) const {
  if (q.tokens.empty()) return QuestionCategory::other;
  if (q.tokens.size() >= 2 && text::lower(q.tokens[0].surface) == "how" &&
      text::lower(q.tokens[1].surface) == "many")
    return QuestionCategory::number;
  Tag t0 = q.tokens[0].tag;
  if (t0 == Tag::VBZ || t0 == Tag::VBP || t0 == Tag::VBD || t0 == Tag::MD)
    return QuestionCategory::yes_no;
  return QuestionCategory::other;
}

std::optional<Conversion> QaConverter::convert_yes_no(
    const TaggedSentence& q, const std::string& ans) const {
  const bool yes = (ans == "yes");
  auto chunks = covering_chunks(q);
  if (!chunks) return std::nullopt;
  const Chunks& cs = *chunks;
  const char* prefix = yes ? "Yes" : "No";

  // Y1: finite auxiliary, subject, predicate.
  if (cs.size() >= 2 && vp_single_aux(q, *cs[0]) &&
      cs[1]->kind == ChunkKind::NP) {
    const Token& aux = first_token(q, *cs[0]);
    std::string aux_lw = text::lower(aux.surface);
    PersonNumber pn = Morph::subject_number(q, *cs[1]);
    Emitter e(q);
    if (Lexicon::is_do_form(aux_lw)) {
      // Do-support unwinds onto the base verb that follows the subject.
      Chunks rest = tail(cs, 2);
      if (rest.empty() || rest[0]->kind != ChunkKind::VP) return std::nullopt;
      const Chunk& vp = *rest[0];
      VerbForm v = morph_.verb_form(first_token(q, vp));
      Tense t = morph_.tense(morph_.verb_form(aux));
      e.subject(*cs[1]);
      e.word(yes ? morph_.conjug(v, t, pn) : morph_.negate(v, t, pn));
      e.span({vp.span.begin + 1, vp.span.end});
      e.rest(tail(rest, 1));
    } else {
      e.subject(*cs[1]);
      e.word(aux_lw);
      if (!yes) e.word("not");
      e.rest(tail(cs, 2));
    }
    return make(e, prefix, QuestionCategory::yes_no, "Y1");
  }

  // Y2: modal, subject, predicate.
  if (cs.size() >= 2 && cs[0]->kind == ChunkKind::MD &&
      cs[1]->kind == ChunkKind::NP) {
    Emitter e(q);
    e.subject(*cs[1]);
    e.word(text::lower(first_token(q, *cs[0]).surface));
    if (!yes) e.word("not");
    e.rest(tail(cs, 2));
    return make(e, prefix, QuestionCategory::yes_no, "Y2");
  }

  // Y3: existential ("Are there cats?").
  if (cs.size() >= 2 && vp_single_be(q, *cs[0]) &&
      cs[1]->kind == ChunkKind::EX) {
    Emitter e(q);
    e.chunk(*cs[1]);
    e.word(text::lower(first_token(q, *cs[0]).surface));
    if (!yes) e.word("not");
    e.rest(tail(cs, 2));
    return make(e, prefix, QuestionCategory::yes_no, "Y3");
  }

  return std::nullopt;
}

namespace {

// Shared tense carry for inverted questions: re-fuses an auxiliary with the
// stranded verb ("does ... have" -> "has", "is ... eating" -> "is eating").
void carry_aux(Emitter& e, const Morph& morph, const TaggedSentence& q,
               const Chunk& aux_chunk, const Chunk& vp2, PersonNumber pn) {
  const Token& aux = q.tokens[aux_chunk.span.begin];
  if (aux_chunk.kind == ChunkKind::MD) {
    e.word(text::lower(aux.surface));
    e.chunk(vp2);
    return;
  }
  std::string aux_lw = text::lower(aux.surface);
  if (Lexicon::is_do_form(aux_lw)) {
    VerbForm v = morph.verb_form(q.tokens[vp2.span.begin]);
    Tense t = morph.tense(morph.verb_form(aux));
    e.word(morph.conjug(v, t, pn));
    e.span({vp2.span.begin + 1, vp2.span.end});
  } else {
    e.word(aux_lw);
    e.chunk(vp2);
  }
}

}  // namespace

std::optional<Conversion> QaConverter::convert_number(
    const TaggedSentence& q, const std::string& ans) const {
  auto chunks = covering_chunks(q);
  if (!chunks) return std::nullopt;
  const Chunks& cs = *chunks;
  if (!wh_how_many(q, cs)) return std::nullopt;

  // N1: existential count ("How many pens are there?").
  if (cs.size() >= 4 && cs[1]->kind == ChunkKind::NP &&
      vp_single_be(q, *cs[2]) && cs[3]->kind == ChunkKind::EX) {
    Emitter e(q);
    e.chunk(*cs[3]);
    e.word(text::lower(first_token(q, *cs[2]).surface));
    e.word(ans);
    e.chunk(*cs[1]);
    e.rest(tail(cs, 4));
    return make(e, "", QuestionCategory::number, "N1");
  }

  // N2: counted subject ("How many people are walking?").
  if (cs.size() >= 3 && cs[1]->kind == ChunkKind::NP) {
    std::size_t i = 2;
    const Chunk* md = nullptr;
    if (cs[i]->kind == ChunkKind::MD && i + 1 < cs.size()) md = cs[i++];
    if (cs[i]->kind == ChunkKind::VP && rest_no_verb(tail(cs, i + 1))) {
      Emitter e(q);
      e.word(ans);
      e.chunk(*cs[1]);
      if (md) e.word(text::lower(first_token(q, *md).surface));
      e.chunk(*cs[i]);
      e.rest(tail(cs, i + 1));
      return make(e, "", QuestionCategory::number, "N2");
    }
  }

  // N3: counted object ("How many pens does he have?").
  if (cs.size() >= 5 && cs[1]->kind == ChunkKind::NP &&
      (vp_single_aux(q, *cs[2]) || cs[2]->kind == ChunkKind::MD) &&
      cs[3]->kind == ChunkKind::NP && cs[4]->kind == ChunkKind::VP) {
    PersonNumber pn = Morph::subject_number(q, *cs[3]);
    Emitter e(q);
    e.subject(*cs[3]);
    carry_aux(e, morph_, q, *cs[2], *cs[4], pn);
    e.word(ans);
    e.chunk(*cs[1]);
    e.rest(tail(cs, 5));
    return make(e, "", QuestionCategory::number, "N3");
  }

  return std::nullopt;
}

std::optional<Conversion> QaConverter::convert_other(
    const TaggedSentence& q, const std::string& ans) const {
  auto chunks = covering_chunks(q);
  if (!chunks) return std::nullopt;
  const Chunks& cs = *chunks;
  if (cs[0]->kind != ChunkKind::WH) return std::nullopt;

  // O1: copular subject question ("Who are they?").
  if (cs.size() >= 3 && vp_single_be(q, *cs[1]) &&
      cs[2]->kind == ChunkKind::NP && rest_pp_only(tail(cs, 3))) {
    Emitter e(q);
    e.subject(*cs[2]);
    e.rest(tail(cs, 3));
    e.word(text::lower(first_token(q, *cs[1]).surface));
    e.word(ans);
    return make(e, "", QuestionCategory::other, "O1");
  }

  // O2: questioned subject noun dropped ("What food is on the table?").
  if (cs.size() >= 3 && wh_first(q, cs, Tag::WP) &&
      cs[1]->kind == ChunkKind::NP && cs[2]->kind == ChunkKind::VP) {
    Emitter e(q);
    e.word(ans);
    e.chunk(*cs[2]);
    e.rest(tail(cs, 3));
    return make(e, "", QuestionCategory::other, "O2");
  }

  // O3: questioned determiner kept ("Which hand is holding it?").
  if (cs.size() >= 3 && wh_first(q, cs, Tag::WDT) &&
      cs[1]->kind == ChunkKind::NP && cs[2]->kind == ChunkKind::VP) {
    Emitter e(q);
    e.word(ans);
    e.chunk(*cs[1]);
    e.chunk(*cs[2]);
    e.rest(tail(cs, 3));
    return make(e, "", QuestionCategory::other, "O3");
  }

  // O4: modal subject question ("Who would like this?").
  if (cs.size() >= 3 && wh_wp_or_wdt(q, cs) && cs[1]->kind == ChunkKind::MD &&
      cs[2]->kind == ChunkKind::VP) {
    Emitter e(q);
    e.word(ans);
    e.word(text::lower(first_token(q, *cs[1]).surface));
    e.chunk(*cs[2]);
    e.rest(tail(cs, 3));
    return make(e, "", QuestionCategory::other, "O4");
  }

  // O5: modal object question ("What would the man eat?").
  if (cs.size() >= 4 && wh_wp_or_wdt(q, cs) && cs[1]->kind == ChunkKind::MD &&
      cs[2]->kind == ChunkKind::NP && cs[3]->kind == ChunkKind::VP) {
    Emitter e(q);
    e.subject(*cs[2]);
    e.word(text::lower(first_token(q, *cs[1]).surface));
    e.chunk(*cs[3]);
    e.word(ans);
    e.rest(tail(cs, 4));
    return make(e, "", QuestionCategory::other, "O5");
  }

  // O6: plain subject question ("Who threw the ball?").
  if (cs.size() >= 2 && wh_wp_or_wdt(q, cs) && cs[1]->kind == ChunkKind::VP &&
      rest_no_verb(tail(cs, 2))) {
    Emitter e(q);
    e.word(ans);
    e.chunk(*cs[1]);
    e.rest(tail(cs, 2));
    return make(e, "", QuestionCategory::other, "O6");
  }

  // O7: inverted object question ("What is the man eating?").
  if (cs.size() >= 4 && wh_wp_or_wdt(q, cs) && vp_single_aux(q, *cs[1]) &&
      cs[2]->kind == ChunkKind::NP && cs[3]->kind == ChunkKind::VP) {
    PersonNumber pn = Morph::subject_number(q, *cs[2]);
    Emitter e(q);
    e.subject(*cs[2]);
    carry_aux(e, morph_, q, *cs[1], *cs[3], pn);
    e.word(ans);
    e.rest(tail(cs, 4));
    return make(e, "", QuestionCategory::other, "O7");
  }

  return std::nullopt;
}

Conversion QaConverter::convert(std::string_view question,
                                std::string_view short_answer) const {
  std::string ans = text::normalize_answer(short_answer);
  TaggedSentence q = tagger_.analyze(question);
  q = tagger_.main_clause(q);

  // "Didn't he go?" converts like "Did he go?".
  if (q.tokens.size() >= 2) {
    Tag t0 = q.tokens[0].tag;
    std::string second = text::lower(q.tokens[1].surface);
    bool aux_first = t0 == Tag::VBZ || t0 == Tag::VBP || t0 == Tag::VBD ||
                     t0 == Tag::MD;
    if (aux_first && (second == "n't" || second == "not")) {
      std::vector<std::string> kept;
      for (std::size_t i = 0; i < q.tokens.size(); ++i)
        if (i != 1) kept.push_back(q.tokens[i].surface);
      q = tagger_.chunk(tagger_.tag(kept));
    }
  }

  const QuestionCategory shape = classify(q);
  const bool yn_answer = (ans == "yes" || ans == "no");

  std::optional<Conversion> out;
  QuestionCategory cat;
  if (yn_answer) {
    cat = QuestionCategory::yes_no;
    if (shape == QuestionCategory::yes_no) out = convert_yes_no(q, ans);
  } else if (shape == QuestionCategory::number) {
    cat = QuestionCategory::number;
    out = convert_number(q, ans);
  } else {
    // Includes yes/no-shaped questions whose selected answer is not yes/no;
    // those carry no rule and land on the fallback.
    cat = QuestionCategory::other;
    if (shape == QuestionCategory::other) out = convert_other(q, ans);
  }
  if (out) return *out;

  Conversion fb;
  fb.category = cat;
  fb.fallback = true;
  fb.full_answer = ans.empty() ? "." : text::capitalize(ans) + ".";
  return fb;
}

const std::vector<ConversionRule>& QaConverter::rules() {
  static const std::vector<ConversionRule> table = {
      {"Y1", QuestionCategory::yes_no, "VB1[aux] + NP + rest",
       "yes: NP + conjug(rest, tense(VB1)) | no: NP + negate(rest, "
       "tense(VB1))"},
      {"Y2", QuestionCategory::yes_no, "MD + NP + rest",
       "yes: NP + MD + rest | no: NP + MD + not + rest"},
      {"Y3", QuestionCategory::yes_no, "is/are + EX + rest",
       "yes: EX + is/are + rest | no: EX + is/are + not + rest"},
      {"N1", QuestionCategory::number, "how many + NP + is/are + EX",
       "EX + is/are + ans + NP"},
      {"N2", QuestionCategory::number, "how many + NP1 (+MD) + VP + rest[-V]",
       "ans + NP1 (+MD) + VP + rest"},
      {"N3", QuestionCategory::number, "how many + NP1 + VB1/MD + NP2 + VP",
       "NP2 + (MD + VP)/conjug(VP, tense(VB1)) + ans + NP1"},
      {"O1", QuestionCategory::other, "WH + is/are + NP + rest[PP]",
       "NP + rest + is/are + ans"},
      {"O2", QuestionCategory::other, "WP + NP + VP + rest",
       "ans + VP + rest"},
      {"O3", QuestionCategory::other, "WDT + NP + VP + rest",
       "ans + NP + VP + rest"},
      {"O4", QuestionCategory::other, "WP/WDT + MD + VP + rest",
       "ans + MD + VP + rest"},
      {"O5", QuestionCategory::other, "WP/WDT + MD + NP + VP + rest",
       "NP + MD + VP + ans + rest"},
      {"O6", QuestionCategory::other, "WP/WDT + VP + rest[-V]",
       "ans + VP + rest"},
      {"O7", QuestionCategory::other, "WP/WDT + VB1[aux] + NP + VP + rest",
       "NP + conjug(VP, tense(VB1)) + ans + rest"},
  };
  return table;
}

}  // namespace fsvqa
