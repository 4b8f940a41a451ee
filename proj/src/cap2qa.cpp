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

#include "fsvqa/cap2qa.hpp"

#include <fstream>
#include <set>
#include <unordered_set>

#include "fsvqa/morph.hpp"
#include "fsvqa/rng.hpp"
#include "fsvqa/text.hpp"
#include "fsvqa/types.hpp"

namespace fsvqa {

namespace {

std::vector<std::string> read_lines(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot open " + file.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = text::trim(line);
    if (!t.empty()) lines.push_back(std::move(t));
  }
  return lines;
}

bool all_lower(const std::string& s) {
  for (char c : s)
    if (c >= 'A' && c <= 'Z') return false;
  return true;
}

std::string with_article(const std::string& name) {
  if (name.empty()) return name;
  char c = name[0];
  bool vowel = c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
  return (vowel ? "an " : "a ") + name;
}

const std::unordered_set<std::string>& person_nouns() {
  static const std::unordered_set<std::string> set = {
      "man",   "men",      "woman", "women",  "boy",    "boys",
      "girl",  "girls",    "person", "people", "child",  "children",
      "kid",   "kids",     "lady",  "ladies", "guy",    "guys",
      "baby",  "babies",   "player", "players", "crowd", "family",
  };
  return set;
}

const std::unordered_set<std::string>& locative_preps() {
  static const std::unordered_set<std::string> set = {
      "in",     "on",      "at",      "inside", "outside", "near",
      "under",  "over",    "behind",  "beside", "above",   "below",
      "between", "around", "along",   "across", "atop",    "beneath",
      "underneath",
  };
  return set;
}

using Chunks = std::vector<const Chunk*>;

// Collects question tokens; tokens copied from the caption's front lose
// their positional capitalization unless they keep it lexically.
class QBuilder {
 public:
  explicit QBuilder(const TaggedSentence& s) : s_(&s) {}

  void token(int idx) {
    const Token& t = s_->tokens[idx];
    if (idx == 0 && t.tag != Tag::NNP && t.surface != "I")
      out_.push_back(text::decapitalize(t.surface));
    else
      out_.push_back(t.surface);
  }

  void span(TokenSpan sp) {
    for (int i = sp.begin; i < sp.end; ++i) token(i);
  }

  void chunk(const Chunk& c) { span(c.span); }

  void chunks(const Chunks& cs) {
    for (const Chunk* c : cs) chunk(*c);
  }

  void word(std::string_view phrase) {
    for (auto& w : text::tokenize(phrase)) out_.push_back(std::move(w));
  }

  std::string question() const {
    std::vector<std::string> toks = out_;
    toks.emplace_back("?");
    return text::capitalize(text::detokenize(toks));
  }

 private:
  const TaggedSentence* s_;
  std::vector<std::string> out_;
};

// The caption restated as a canonical declarative (trimmed terminal
// punctuation replaced by a period, leading capital).
std::string caption_answer(const TaggedSentence& c) {
  std::vector<std::string> toks;
  for (int i = 0; i < c.content_end(); ++i) toks.push_back(c.tokens[i].surface);
  toks.emplace_back(".");
  return text::capitalize(text::detokenize(toks));
}

std::string short_surface(const TaggedSentence& s, TokenSpan sp) {
  return text::decapitalize(s.surface(sp));
}

// The structural reading of a declarative caption used by every generator.
struct Shape {
  bool covered = false;
  const Chunk* ex = nullptr;   // existential opener
  const Chunk* np1 = nullptr;  // subject (or existential pivot)
  const Chunk* md = nullptr;
  const Chunk* vp = nullptr;   // main verb cluster
  Chunks rest;                 // chunks after the verb phrase
};

Shape read_shape(const TaggedSentence& s) {
  Shape sh;
  auto cov = covering_chunks(s);
  if (!cov) return sh;
  const Chunks& cs = *cov;
  std::size_t i = 0;
  if (cs[i]->kind == ChunkKind::EX) {
    if (cs.size() < 3 || cs[1]->kind != ChunkKind::VP ||
        cs[2]->kind != ChunkKind::NP)
      return sh;
    sh.ex = cs[0];
    sh.vp = cs[1];
    sh.np1 = cs[2];
    sh.rest.assign(cs.begin() + 3, cs.end());
    sh.covered = true;
    return sh;
  }
  if (cs[i]->kind != ChunkKind::NP) return sh;
  sh.np1 = cs[i++];
  if (i < cs.size() && cs[i]->kind == ChunkKind::MD) sh.md = cs[i++];
  if (i < cs.size() && cs[i]->kind == ChunkKind::VP) sh.vp = cs[i++];
  if (sh.md && !sh.vp) return sh;  // modal with no verb: give up
  sh.rest.assign(cs.begin() + static_cast<long>(i), cs.end());
  sh.covered = true;
  return sh;
}

const Token& head_token(const TaggedSentence& s, const Chunk& c) {
  return s.tokens[c.span.begin];
}

bool is_finite_lexical(const Token& t) {
  return t.tag == Tag::VBD || t.tag == Tag::VBZ || t.tag == Tag::VBP;
}

}  // namespace

const char* to_string(QaKind k) {
  switch (k) {
    case QaKind::yes_affirm: return "yes_affirm";
    case QaKind::no_substituted: return "no_substituted";
    case QaKind::how_many: return "how_many";
    case QaKind::wh_subject: return "wh_subject";
    case QaKind::wh_doing: return "wh_doing";
    case QaKind::wh_category: return "wh_category";
    case QaKind::wh_where: return "wh_where";
  }
  return "?";
}

SubstitutionLists SubstitutionLists::load(
    const std::filesystem::path& agents_file,
    const std::filesystem::path& actions_file) {
  SubstitutionLists lists;
  lists.agents = read_lines(agents_file);
  lists.actions = read_lines(actions_file);
  if (lists.agents.size() != 1000)
    throw SchemaError(agents_file.string() + ": expected 1000 agent classes, got " +
                      std::to_string(lists.agents.size()));
  if (lists.actions.size() != 121)
    throw SchemaError(actions_file.string() +
                      ": expected 121 action classes, got " +
                      std::to_string(lists.actions.size()));
  for (const auto& a : lists.agents)
    if (!all_lower(a))
      throw SchemaError(agents_file.string() + ": class not lowercase: " + a);
  for (const auto& a : lists.actions)
    if (!all_lower(a))
      throw SchemaError(actions_file.string() + ": class not lowercase: " + a);
  return lists;
}

CategoryLexicons CategoryLexicons::load(const std::filesystem::path& file) {
  static const std::set<std::string> kCategories = {
      "color", "animal", "room", "food", "transportation", "sport"};
  std::ifstream in(file);
  if (!in) throw IoError("cannot open " + file.string());
  CategoryLexicons lex;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    std::vector<std::string> cols;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = line.find('\t', start);
      cols.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    auto where = file.string() + ":" + std::to_string(line_no);
    if (cols.size() < 2 || cols.size() > 3)
      throw SchemaError(where + ": expected 2 or 3 tab-separated columns");
    std::string category = text::trim(cols[0]);
    std::string member = text::lower(text::trim(cols[1]));
    std::string label =
        cols.size() == 3 ? text::trim(cols[2]) : category;
    if (!kCategories.contains(category))
      throw SchemaError(where + ": unknown category " + category);
    if (member.empty()) throw SchemaError(where + ": empty member");
    // Cross-category ambiguity ("orange") is real; the first listing wins.
    // A repeat within one category is a data error.
    if (auto it = lex.members_.find(member); it != lex.members_.end()) {
      if (it->second.category == category)
        throw SchemaError(where + ": duplicate member " + member);
      continue;
    }
    lex.members_[member] = Entry{category, label};
  }
  return lex;
}

const CategoryLexicons::Entry* CategoryLexicons::find(
    const std::string& lower_word) const {
  auto it = members_.find(lower_word);
  return it == members_.end() ? nullptr : &it->second;
}

namespace {

// Subject-auxiliary inversion of a declarative. Bare noun phrases fall back
// to the look-like form. Empty result: nothing invertible.
std::optional<std::string> invert(const Morph& morph, const TaggedSentence& s,
                                  const Shape& sh) {
  if (sh.covered && sh.ex && sh.vp) {
    const Token& f = head_token(s, *sh.vp);
    if (!Lexicon::is_be_form(text::lower(f.surface))) return std::nullopt;
    QBuilder b(s);
    b.word(text::lower(f.surface));
    b.chunk(*sh.ex);
    b.span({sh.vp->span.begin + 1, sh.vp->span.end});
    b.chunk(*sh.np1);
    b.chunks(sh.rest);
    return b.question();
  }
  if (sh.covered && sh.np1 && sh.md && sh.vp) {
    QBuilder b(s);
    b.word(text::lower(head_token(s, *sh.md).surface));
    b.chunk(*sh.np1);
    b.chunk(*sh.vp);
    b.chunks(sh.rest);
    return b.question();
  }
  if (sh.covered && sh.np1 && sh.vp) {
    const Token& f = head_token(s, *sh.vp);
    std::string flw = text::lower(f.surface);
    PersonNumber pn = Morph::subject_number(s, *sh.np1);
    QBuilder b(s);
    if (Lexicon::is_be_form(flw) ||
        (Lexicon::is_have_form(flw) && sh.vp->span.size() >= 2)) {
      b.word(flw);
      b.chunk(*sh.np1);
      b.span({sh.vp->span.begin + 1, sh.vp->span.end});
    } else if (is_finite_lexical(f)) {
      VerbForm v = morph.verb_form(f);
      b.word(morph.do_form(morph.tense(v), pn));
      b.chunk(*sh.np1);
      b.word(v.lemma);
      b.span({sh.vp->span.begin + 1, sh.vp->span.end});
    } else if (f.tag == Tag::VBG || f.tag == Tag::VBN) {
      // Verbless caption style ("A man riding a wave."): supply the copula.
      b.word(morph.be_form(Tense::present, pn));
      b.chunk(*sh.np1);
      b.chunk(*sh.vp);
    } else {
      return std::nullopt;
    }
    b.chunks(sh.rest);
    return b.question();
  }
  // Bare noun phrase, possibly with trailing modifiers ("A man in a hat.").
  if (sh.covered && sh.np1 && !sh.vp) {
    QBuilder b(s);
    b.word("does it look like");
    b.chunk(*sh.np1);
    b.chunks(sh.rest);
    return b.question();
  }
  return std::nullopt;
}

// Direct object chunk right after the verb phrase, if any.
const Chunk* object_of(const Shape& sh) {
  if (!sh.rest.empty() && sh.rest.front()->kind == ChunkKind::NP)
    return sh.rest.front();
  return nullptr;
}

std::vector<std::string> surfaces(const TaggedSentence& s) {
  std::vector<std::string> out;
  out.reserve(s.tokens.size());
  for (const Token& t : s.tokens) out.push_back(t.surface);
  return out;
}

// Splices `phrase` over [begin, end) of the caption's tokens and re-analyzes.
TaggedSentence splice(const Tagger& tagger, const TaggedSentence& s, int begin,
                      int end, std::string_view phrase) {
  std::vector<std::string> toks;
  for (int i = 0; i < begin; ++i) toks.push_back(s.tokens[i].surface);
  for (auto& w : text::tokenize(phrase)) toks.push_back(std::move(w));
  for (int i = end; i < static_cast<int>(s.tokens.size()); ++i)
    toks.push_back(s.tokens[i].surface);
  return tagger.chunk(tagger.tag(toks));
}

// After swapping the subject, the main verb re-agrees with the new head
// ("People are ..." -> "A cat is ...").
TaggedSentence reagree(const Tagger& tagger, const Morph& morph,
                       TaggedSentence s, int subject_begin) {
  const Chunk* subject = nullptr;
  for (const Chunk& c : s.chunks)
    if (c.kind == ChunkKind::NP && c.span.begin == subject_begin) subject = &c;
  if (!subject) return s;
  PersonNumber pn = Morph::subject_number(s, *subject);
  for (const Chunk& c : s.chunks) {
    if (c.kind != ChunkKind::VP) continue;
    const Token& f = s.tokens[c.span.begin];
    if (!is_finite_lexical(f)) return s;
    std::string fixed = morph.conjug(morph.verb_form(f), morph.tense(morph.verb_form(f)), pn);
    if (fixed == text::lower(f.surface)) return s;
    std::vector<std::string> toks = surfaces(s);
    toks[c.span.begin] = fixed;
    return tagger.chunk(tagger.tag(toks));
  }
  return s;
}

}  // namespace

std::optional<GeneratedQA> CaptionConverter::affirm_question(
    const TaggedSentence& c) const {
  Shape sh = read_shape(c);
  auto q = invert(morph_, c, sh);
  if (!q) return std::nullopt;
  Conversion conv = qa_.convert(*q, "yes");
  if (conv.fallback) return std::nullopt;
  return GeneratedQA{*q, conv.full_answer, "yes", QaKind::yes_affirm};
}

std::optional<GeneratedQA> CaptionConverter::negative_question(
    const TaggedSentence& c, const Substitution& sub) const {
  Shape sh = read_shape(c);
  TaggedSentence mod;

  if (sub.kind == Substitution::Kind::agent) {
    const Chunk* target = sh.np1;
    if (!target) {
      for (const Chunk& ch : c.chunks)
        if (ch.kind == ChunkKind::NP) {
          target = &ch;
          break;
        }
    }
    if (!target) return std::nullopt;
    int begin = target->span.begin;
    mod = splice(tagger_, c, begin, target->span.end, sub.phrase);
    mod = reagree(tagger_, morph_, std::move(mod), begin);
  } else {
    if (!sh.covered || !sh.vp || !sh.np1) return std::nullopt;
    const Token& f = head_token(c, *sh.vp);
    std::string flw = text::lower(f.surface);
    const Chunk* obj = object_of(sh);
    int end = obj ? obj->span.end : sh.vp->span.end;
    PersonNumber pn = Morph::subject_number(c, *sh.np1);
    if (Lexicon::is_be_form(flw) && sh.vp->span.size() >= 2) {
      mod = splice(tagger_, c, sh.vp->span.begin + 1, end, sub.phrase);
    } else if (f.tag == Tag::VBG) {
      mod = splice(tagger_, c, sh.vp->span.begin, end, sub.phrase);
    } else if (sh.md) {
      mod = splice(tagger_, c, sh.vp->span.begin, end, "be " + sub.phrase);
    } else if (is_finite_lexical(f)) {
      Tense t = morph_.tense(morph_.verb_form(f));
      mod = splice(tagger_, c, sh.vp->span.begin, end,
                   morph_.be_form(t, pn) + " " + sub.phrase);
    } else {
      return std::nullopt;
    }
  }

  Shape msh = read_shape(mod);
  auto q = invert(morph_, mod, msh);
  if (!q) return std::nullopt;
  Conversion conv = qa_.convert(*q, "no");
  if (conv.fallback) return std::nullopt;
  return GeneratedQA{*q, conv.full_answer, "no", QaKind::no_substituted};
}

std::optional<GeneratedQA> CaptionConverter::negative_question(
    const TaggedSentence& c, std::uint64_t rng_seed) const {
  Shape sh = read_shape(c);

  bool agent_ok = sh.np1 != nullptr;
  if (!agent_ok) {
    for (const Chunk& ch : c.chunks)
      if (ch.kind == ChunkKind::NP) agent_ok = true;
  }
  bool action_ok = false;
  if (sh.covered && sh.vp && sh.np1 && !sh.ex) {
    const Token& f = head_token(c, *sh.vp);
    std::string flw = text::lower(f.surface);
    action_ok = (Lexicon::is_be_form(flw) && sh.vp->span.size() >= 2) ||
                f.tag == Tag::VBG || sh.md != nullptr || is_finite_lexical(f);
    if (Lexicon::is_have_form(flw)) action_ok = false;
  }
  if (!agent_ok && !action_ok) return std::nullopt;

  SplitMix rng(rng_seed);
  bool pick_agent = agent_ok;
  if (agent_ok && action_ok) pick_agent = rng.coin();

  Substitution sub;
  if (pick_agent) {
    sub.kind = Substitution::Kind::agent;
    sub.phrase = with_article(lists_.agents[rng.below(lists_.agents.size())]);
  } else {
    sub.kind = Substitution::Kind::action;
    sub.phrase = lists_.actions[rng.below(lists_.actions.size())];
  }
  return negative_question(c, sub);
}

std::optional<GeneratedQA> CaptionConverter::how_many_question(
    const TaggedSentence& c) const {
  Shape sh = read_shape(c);
  if (!sh.covered || !sh.np1) return std::nullopt;
  const Chunk& np = *sh.np1;
  if (!np.num || np.num->begin != np.span.begin) return std::nullopt;

  std::string short_ans = text::lower(c.surface(*np.num));
  std::string answer = caption_answer(c);

  if (sh.ex && sh.vp &&
      Lexicon::is_be_form(text::lower(head_token(c, *sh.vp).surface))) {
    QBuilder b(c);
    b.word("how many");
    b.span({np.num->end, np.span.end});
    b.word(text::lower(head_token(c, *sh.vp).surface));
    b.chunk(*sh.ex);
    b.span({sh.vp->span.begin + 1, sh.vp->span.end});
    b.chunks(sh.rest);
    return GeneratedQA{b.question(), answer, short_ans, QaKind::how_many};
  }
  if (!sh.ex) {
    TaggedSentence masked = replace(tagger_, c, *np.num, "how many");
    QBuilder b(masked);
    b.span({0, masked.content_end()});
    return GeneratedQA{b.question(), answer, short_ans, QaKind::how_many};
  }
  return std::nullopt;
}

std::vector<GeneratedQA> CaptionConverter::wh_questions(
    const TaggedSentence& c) const {
  std::vector<GeneratedQA> out;
  Shape sh = read_shape(c);
  if (!sh.covered || sh.ex || !sh.np1 || !sh.vp) return out;

  const std::string answer = caption_answer(c);
  const Token& f = head_token(c, *sh.vp);
  const std::string flw = text::lower(f.surface);
  const PersonNumber pn = Morph::subject_number(c, *sh.np1);
  const Chunk* obj = object_of(sh);
  const bool be_initial = Lexicon::is_be_form(flw);
  const bool progressive = be_initial && sh.vp->span.size() >= 2 &&
                           c.tokens[sh.vp->span.begin + 1].tag == Tag::VBG;
  const int after_np1 = sh.np1->span.end;

  // Subject question.
  {
    const Token& head = c.tokens[sh.np1->head >= 0 ? sh.np1->head
                                                   : sh.np1->span.begin];
    bool person = person_nouns().contains(text::lower(head.surface));
    QBuilder b(c);
    b.word(person ? "who" : "what");
    b.span({after_np1, c.content_end()});
    out.push_back(GeneratedQA{b.question(), answer,
                              short_surface(c, sh.np1->span),
                              QaKind::wh_subject});
  }

  // Doing question.
  {
    std::optional<QBuilder> b;
    int target_begin = -1;
    if (sh.md && morph_.verb_form(f).lemma != "be") {
      b.emplace(c);
      b->word("what");
      b->word(text::lower(head_token(c, *sh.md).surface));
      b->chunk(*sh.np1);
      b->word("do");
      target_begin = sh.vp->span.begin;
    } else if (progressive) {
      b.emplace(c);
      b->word("what");
      b->word(flw);
      b->chunk(*sh.np1);
      b->word("doing");
      target_begin = sh.vp->span.begin + 1;
    } else if (f.tag == Tag::VBG) {
      b.emplace(c);
      b->word("what");
      b->word(morph_.be_form(Tense::present, pn));
      b->chunk(*sh.np1);
      b->word("doing");
      target_begin = sh.vp->span.begin;
    } else if (!sh.md && is_finite_lexical(f) && !be_initial &&
               !Lexicon::is_have_form(flw)) {
      b.emplace(c);
      b->word("what");
      b->word(morph_.do_form(morph_.tense(morph_.verb_form(f)), pn));
      b->chunk(*sh.np1);
      b->word("do");
      target_begin = sh.vp->span.begin;
    }
    if (b) {
      int target_end = obj ? obj->span.end : sh.vp->span.end;
      out.push_back(GeneratedQA{
          b->question(), answer,
          short_surface(c, {target_begin, target_end}), QaKind::wh_doing});
    }
  }

  // Category question: a lexicon member as subject head or modifier.
  {
    const CategoryLexicons::Entry* hit = nullptr;
    int hit_idx = -1;
    if (sh.np1->head >= 0) {
      hit = categories_.find(text::lower(c.tokens[sh.np1->head].surface));
      hit_idx = sh.np1->head;
    }
    if (!hit) {
      for (int i = sh.np1->span.begin; i < sh.np1->span.end; ++i) {
        if (i == sh.np1->head) continue;
        hit = categories_.find(text::lower(c.tokens[i].surface));
        if (hit) {
          hit_idx = i;
          break;
        }
      }
    }
    if (hit) {
      QBuilder b(c);
      b.word("what");
      b.word(hit->label);
      if (hit_idx != sh.np1->head)
        b.span({hit_idx + 1, sh.np1->span.end});  // "what color car ..."
      b.span({after_np1, c.content_end()});
      out.push_back(GeneratedQA{b.question(), answer,
                                text::lower(c.tokens[hit_idx].surface),
                                QaKind::wh_category});
    }
  }

  // Where question: final locative prepositional phrase.
  if (!sh.rest.empty()) {
    const Chunk* pp = sh.rest.back();
    bool locative =
        pp->kind == ChunkKind::IN_PP &&
        locative_preps().contains(text::lower(head_token(c, *pp).surface));
    if (locative) {
      Chunks mid(sh.rest.begin(), sh.rest.end() - 1);
      std::optional<QBuilder> b;
      if (sh.md) {
        b.emplace(c);
        b->word("where");
        b->word(text::lower(head_token(c, *sh.md).surface));
        b->chunk(*sh.np1);
        b->chunk(*sh.vp);
      } else if (be_initial || (Lexicon::is_have_form(flw) &&
                                sh.vp->span.size() >= 2)) {
        b.emplace(c);
        b->word("where");
        b->word(flw);
        b->chunk(*sh.np1);
        b->span({sh.vp->span.begin + 1, sh.vp->span.end});
      } else if (is_finite_lexical(f)) {
        VerbForm v = morph_.verb_form(f);
        b.emplace(c);
        b->word("where");
        b->word(morph_.do_form(morph_.tense(v), pn));
        b->chunk(*sh.np1);
        b->word(v.lemma);
        b->span({sh.vp->span.begin + 1, sh.vp->span.end});
      } else if (f.tag == Tag::VBG) {
        b.emplace(c);
        b->word("where");
        b->word(morph_.be_form(Tense::present, pn));
        b->chunk(*sh.np1);
        b->chunk(*sh.vp);
      }
      if (b) {
        b->chunks(mid);
        out.push_back(GeneratedQA{b->question(), answer,
                                  short_surface(c, pp->span),
                                  QaKind::wh_where});
      }
    }
  }

  return out;
}

std::vector<GeneratedQA> CaptionConverter::generate(
    std::string_view caption, std::uint64_t rng_seed) const {
  std::vector<GeneratedQA> out;
  TaggedSentence c = tagger_.analyze(caption);
  if (c.tokens.empty() || c.content_end() == 0) return out;

  if (auto yes = affirm_question(c)) out.push_back(std::move(*yes));
  if (auto no = negative_question(c, rng_seed)) out.push_back(std::move(*no));
  if (auto hm = how_many_question(c)) out.push_back(std::move(*hm));
  for (auto& wh : wh_questions(c)) out.push_back(std::move(wh));
  return out;
}

std::vector<CaptionQa> balance_yes_no(std::int64_t image_id,
                                      std::vector<CaptionQa> qas) {
  // Caption index within the image, in order of first appearance.
  std::vector<std::int64_t> order;
  auto caption_index = [&](std::int64_t id) {
    for (std::size_t i = 0; i < order.size(); ++i)
      if (order[i] == id) return i;
    order.push_back(id);
    return order.size() - 1;
  };

  std::vector<bool> keep(qas.size(), true);
  int kept_yes = 0, kept_no = 0;
  int first_dropped_yes = -1, first_dropped_no = -1;
  for (std::size_t i = 0; i < qas.size(); ++i) {
    QaKind k = qas[i].qa.kind;
    if (k != QaKind::yes_affirm && k != QaKind::no_substituted) continue;
    std::size_t ci = caption_index(qas[i].caption_id);
    bool keep_yes = ((static_cast<std::uint64_t>(image_id) + ci) % 2) == 0;
    bool keeping = (k == QaKind::yes_affirm) ? keep_yes : !keep_yes;
    keep[i] = keeping;
    if (keeping) {
      (k == QaKind::yes_affirm ? kept_yes : kept_no)++;
    } else if (k == QaKind::yes_affirm && first_dropped_yes < 0) {
      first_dropped_yes = static_cast<int>(i);
    } else if (k == QaKind::no_substituted && first_dropped_no < 0) {
      first_dropped_no = static_cast<int>(i);
    }
  }
  if (kept_yes == 0 && first_dropped_yes >= 0) keep[first_dropped_yes] = true;
  if (kept_no == 0 && first_dropped_no >= 0) keep[first_dropped_no] = true;

  std::vector<CaptionQa> out;
  out.reserve(qas.size());
  for (std::size_t i = 0; i < qas.size(); ++i)
    if (keep[i]) out.push_back(std::move(qas[i]));
  return out;
}

}  // namespace fsvqa
