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

#include "fsvqa/morph.hpp"

#include <stdexcept>

#include "fsvqa/text.hpp"

namespace fsvqa {

namespace {

bool is_vowel(char c) {
  switch (c) {
    case 'a': case 'e': case 'i': case 'o': case 'u':
      return true;
    default:
      return false;
  }
}

bool is_consonant(char c) {
  return c >= 'a' && c <= 'z' && !is_vowel(c);
}

// Final consonant doubling for one-syllable-ish stems ("stop" -> "stopp-").
bool doubles_final(const std::string& lemma) {
  if (lemma.size() < 3) return false;
  char a = lemma[lemma.size() - 3];
  char b = lemma[lemma.size() - 2];
  char c = lemma[lemma.size() - 1];
  return is_consonant(a) && is_vowel(b) && is_consonant(c) && c != 'w' &&
         c != 'x' && c != 'y';
}

std::string regular_past(const std::string& lemma) {
  if (lemma.empty()) return lemma;
  if (lemma.back() == 'e') return lemma + "d";
  if (lemma.size() >= 2 && lemma.back() == 'y' &&
      is_consonant(lemma[lemma.size() - 2]))
    return lemma.substr(0, lemma.size() - 1) + "ied";
  if (lemma.size() <= 4 && doubles_final(lemma))
    return lemma + lemma.back() + "ed";
  return lemma + "ed";
}

std::string regular_third_sg(const std::string& lemma) {
  if (lemma.empty()) return lemma;
  if (lemma.ends_with("s") || lemma.ends_with("sh") || lemma.ends_with("ch") ||
      lemma.ends_with("x") || lemma.ends_with("z") || lemma.ends_with("o"))
    return lemma + "es";
  if (lemma.size() >= 2 && lemma.back() == 'y' &&
      is_consonant(lemma[lemma.size() - 2]))
    return lemma.substr(0, lemma.size() - 1) + "ies";
  return lemma + "s";
}

}  // namespace

const char* to_string(Tense t) {
  switch (t) {
    case Tense::past: return "past";
    case Tense::present: return "present";
    case Tense::future: return "future";
    case Tense::past_perfect: return "past_perfect";
    case Tense::present_perfect: return "present_perfect";
    case Tense::future_perfect: return "future_perfect";
  }
  return "?";
}

std::string Morph::lemma_of(const std::string& surface, Tag tag) const {
  std::string lw = text::lower(surface);
  // "am", "are", "were" and "being" are not verb-table forms.
  if (Lexicon::is_be_form(lw)) return "be";
  if (const VerbEntry* v = lex_.verb_by_form(lw)) return v->lemma;
  switch (tag) {
    case Tag::VBZ:
      if (lw.ends_with("ies") && lw.size() > 4)
        return lw.substr(0, lw.size() - 3) + "y";
      if (lw.ends_with("es") && lw.size() > 3) {
        std::string stem = lw.substr(0, lw.size() - 2);
        if (stem.ends_with("s") || stem.ends_with("sh") ||
            stem.ends_with("ch") || stem.ends_with("x") ||
            stem.ends_with("z") || stem.ends_with("o"))
          return stem;
      }
      if (lw.ends_with("s") && lw.size() > 2)
        return lw.substr(0, lw.size() - 1);
      return lw;
    case Tag::VBD:
    case Tag::VBN:
      if (lw.ends_with("ied") && lw.size() > 4)
        return lw.substr(0, lw.size() - 3) + "y";
      if (lw.ends_with("ed") && lw.size() > 3) {
        std::string stem = lw.substr(0, lw.size() - 2);
        if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2] &&
            is_consonant(stem.back()) && !stem.ends_with("ll") &&
            !stem.ends_with("ss"))
          return stem.substr(0, stem.size() - 1);
        return stem;
      }
      return lw;
    case Tag::VBG:
      if (lw.ends_with("ing") && lw.size() > 4) {
        std::string stem = lw.substr(0, lw.size() - 3);
        if (const VerbEntry* v2 = lex_.verb_by_form(stem + "e"))
          return v2->lemma;
        if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2] &&
            is_consonant(stem.back()) && !stem.ends_with("ll") &&
            !stem.ends_with("ss"))
          return stem.substr(0, stem.size() - 1);
        return stem;
      }
      return lw;
    default:
      return lw;
  }
}

VerbForm Morph::verb_form(const Token& t) const {
  VerbForm v;
  v.surface = t.surface;
  v.form_tag = t.tag;
  v.lemma = lemma_of(t.surface, t.tag);
  return v;
}

Tense Morph::tense(const VerbForm& v) const {
  if (v.form_tag == Tag::MD) {
    std::string lw = text::lower(v.surface);
    if (Lexicon::is_will_form(lw)) return Tense::future;
    if (lw == "would" || lw == "could" || lw == "should" || lw == "might")
      return Tense::past;
    return Tense::present;
  }
  switch (v.form_tag) {
    case Tag::VBD: return Tense::past;
    case Tag::VBZ:
    case Tag::VBP:
    case Tag::VB: return Tense::present;
    default:
      throw std::domain_error("tense: not a finite verb: " + v.surface);
  }
}

Tense Morph::tense_of_cluster(const TaggedSentence& s, TokenSpan cluster) const {
  if (cluster.empty())
    throw std::domain_error("tense: empty verb cluster");
  const Token& first = s.tokens[cluster.begin];
  std::string lw = text::lower(first.surface);

  auto has_participle_after = [&](int from) {
    for (int i = from; i < cluster.end; ++i)
      if (s.tokens[i].tag == Tag::VBN) return true;
    return false;
  };

  if (first.tag == Tag::MD && Lexicon::is_will_form(lw)) {
    for (int i = cluster.begin + 1; i < cluster.end; ++i) {
      if (Lexicon::is_have_form(text::lower(s.tokens[i].surface)) &&
          has_participle_after(i + 1))
        return Tense::future_perfect;
    }
    return Tense::future;
  }
  if (lw == "had" && has_participle_after(cluster.begin + 1))
    return Tense::past_perfect;
  if ((lw == "has" || lw == "have") && has_participle_after(cluster.begin + 1))
    return Tense::present_perfect;
  return tense(verb_form(first));
}

std::string Morph::be_form(Tense t, PersonNumber pn) const {
  switch (t) {
    case Tense::past: return pn == PersonNumber::sing3 ? "was" : "were";
    case Tense::present: return pn == PersonNumber::sing3 ? "is" : "are";
    case Tense::future: return "will be";
    case Tense::past_perfect: return "had been";
    case Tense::present_perfect:
      return pn == PersonNumber::sing3 ? "has been" : "have been";
    case Tense::future_perfect: return "will have been";
  }
  return "is";
}

std::string Morph::do_form(Tense t, PersonNumber pn) const {
  switch (t) {
    case Tense::past: return "did";
    case Tense::present: return pn == PersonNumber::sing3 ? "does" : "do";
    case Tense::future: return "will";
    case Tense::past_perfect: return "had";
    case Tense::present_perfect:
      return pn == PersonNumber::sing3 ? "has" : "have";
    case Tense::future_perfect: return "will have";
  }
  return "do";
}

std::string Morph::third_sg(const std::string& lemma) const {
  if (const VerbEntry* v = lex_.verb_by_lemma(lemma)) return v->third_sg;
  return regular_third_sg(lemma);
}

std::string Morph::past(const std::string& lemma) const {
  if (const VerbEntry* v = lex_.verb_by_lemma(lemma)) return v->past;
  return regular_past(lemma);
}

std::string Morph::participle(const std::string& lemma) const {
  if (const VerbEntry* v = lex_.verb_by_lemma(lemma)) return v->participle;
  return regular_past(lemma);
}

std::string Morph::conjug(const VerbForm& v, Tense t, PersonNumber pn) const {
  if (v.form_tag == Tag::JJ) return v.surface;
  if (!is_verb_tag(v.form_tag) && v.form_tag != Tag::MD)
    throw std::domain_error("conjug: not a verb: " + v.surface);
  if (v.form_tag == Tag::MD) return text::lower(v.surface);

  if (v.form_tag == Tag::VBG)
    return be_form(t, pn) + " " + text::lower(v.surface);
  if (v.form_tag == Tag::VBN && v.lemma != text::lower(v.surface))
    return be_form(t, pn) + " " + text::lower(v.surface);

  if (v.lemma == "be") return be_form(t, pn);

  switch (t) {
    case Tense::past:
      return past(v.lemma);
    case Tense::present:
      return pn == PersonNumber::sing3 ? third_sg(v.lemma) : v.lemma;
    case Tense::future:
      return "will " + v.lemma;
    case Tense::past_perfect:
      return "had " + participle(v.lemma);
    case Tense::present_perfect:
      return (pn == PersonNumber::sing3 ? "has " : "have ") +
             participle(v.lemma);
    case Tense::future_perfect:
      return "will have " + participle(v.lemma);
  }
  return v.lemma;
}

std::string Morph::negate(const VerbForm& v, Tense t, PersonNumber pn) const {
  if (v.form_tag == Tag::MD) return text::lower(v.surface) + " not";
  if (!is_verb_tag(v.form_tag))
    throw std::domain_error("negate: not a verb: " + v.surface);

  std::string lw = text::lower(v.surface);
  if (Lexicon::is_be_form(lw) || Lexicon::is_do_form(lw) ||
      Lexicon::is_have_form(lw))
    return lw + " not";

  switch (t) {
    case Tense::past:
      return "did not " + v.lemma;
    case Tense::present:
      return (pn == PersonNumber::sing3 ? "does not " : "do not ") + v.lemma;
    case Tense::future:
      return "will not " + v.lemma;
    case Tense::past_perfect:
      return "had not " + participle(v.lemma);
    case Tense::present_perfect:
      return (pn == PersonNumber::sing3 ? "has not " : "have not ") +
             participle(v.lemma);
    case Tense::future_perfect:
      return "will not have " + participle(v.lemma);
  }
  return "did not " + v.lemma;
}

PersonNumber Morph::subject_number(const TaggedSentence& s, const Chunk& np) {
  if (np.conjoined) return PersonNumber::other;
  if (np.head >= 0 && np.head < static_cast<int>(s.tokens.size())) {
    const Token& h = s.tokens[np.head];
    if (h.tag == Tag::NNS) return PersonNumber::other;
    if (h.tag == Tag::PRP) {
      std::string lw = text::lower(h.surface);
      if (lw == "he" || lw == "she" || lw == "it") return PersonNumber::sing3;
      return PersonNumber::other;
    }
  }
  return PersonNumber::sing3;
}

TaggedSentence replace(const Tagger& tagger, const TaggedSentence& s,
                       TokenSpan target, std::string_view replacement) {
  bool valid = false;
  for (const Chunk& c : s.chunks) {
    if (c.span == target) valid = true;
    if (c.num && *c.num == target) valid = true;
  }
  if (!valid)
    throw std::domain_error("replace: target span is not a chunk");

  std::vector<std::string> out;
  for (int i = 0; i < target.begin; ++i) out.push_back(s.tokens[i].surface);
  for (auto& w : text::tokenize(replacement)) out.push_back(w);
  for (int i = target.end; i < static_cast<int>(s.tokens.size()); ++i)
    out.push_back(s.tokens[i].surface);
  return tagger.chunk(tagger.tag(out));
}

}  // namespace fsvqa
