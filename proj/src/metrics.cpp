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

#include "fsvqa/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <unordered_map>

#include "fsvqa/text.hpp"
#include "fsvqa/types.hpp"
#include "json.hpp"

namespace fsvqa {

// ---------------------------------------------------------------------------
// Porter stemmer (the 1980 algorithm, measure-based suffix stripping).

namespace {

bool p_is_consonant(const std::string& w, std::size_t i) {
  switch (w[i]) {
    case 'a': case 'e': case 'i': case 'o': case 'u':
      return false;
    case 'y':
      return i == 0 ? true : !p_is_consonant(w, i - 1);
    default:
      return true;
  }
}

// Number of VC sequences in w[0..end).
int p_measure(const std::string& w, std::size_t end) {
  int m = 0;
  bool in_vowel_run = false;
  for (std::size_t i = 0; i < end; ++i) {
    bool cons = p_is_consonant(w, i);
    if (!cons) {
      in_vowel_run = true;
    } else if (in_vowel_run) {
      ++m;
      in_vowel_run = false;
    }
  }
  return m;
}

bool p_has_vowel(const std::string& w, std::size_t end) {
  for (std::size_t i = 0; i < end; ++i)
    if (!p_is_consonant(w, i)) return true;
  return false;
}

bool p_double_consonant(const std::string& w, std::size_t end) {
  return end >= 2 && w[end - 1] == w[end - 2] && p_is_consonant(w, end - 1);
}

// consonant-vowel-consonant ending where the last consonant is not w, x, y.
bool p_cvc(const std::string& w, std::size_t end) {
  if (end < 3) return false;
  if (!p_is_consonant(w, end - 3) || p_is_consonant(w, end - 2) ||
      !p_is_consonant(w, end - 1))
    return false;
  char c = w[end - 1];
  return c != 'w' && c != 'x' && c != 'y';
}

bool p_ends(const std::string& w, std::size_t& stem_end,
            std::string_view suffix) {
  if (w.size() < suffix.size()) return false;
  if (w.compare(w.size() - suffix.size(), suffix.size(), suffix) != 0)
    return false;
  stem_end = w.size() - suffix.size();
  return true;
}

void p_set_suffix(std::string& w, std::size_t stem_end,
                  std::string_view suffix) {
  w.resize(stem_end);
  w.append(suffix);
}

// Replace `suffix` with `to` when the remaining stem has measure > m_gt.
bool p_rule(std::string& w, std::string_view suffix, std::string_view to,
            int m_gt) {
  std::size_t stem_end;
  if (!p_ends(w, stem_end, suffix)) return false;
  if (p_measure(w, stem_end) > m_gt) p_set_suffix(w, stem_end, to);
  return true;  // suffix matched, stop scanning this step
}

}  // namespace

std::string porter_stem(const std::string& word) {
  std::string w = word;
  if (w.size() <= 2) return w;

  std::size_t se;  // stem end scratch

  // Step 1a: plurals.
  if (p_ends(w, se, "sses")) {
    w.resize(se + 2);
  } else if (p_ends(w, se, "ies")) {
    w.resize(se + 1);
  } else if (!p_ends(w, se, "ss") && p_ends(w, se, "s")) {
    w.resize(se);
  }

  // Step 1b: -ed / -ing.
  bool restore = false;
  if (p_ends(w, se, "eed")) {
    if (p_measure(w, se) > 0) w.resize(se + 2);
  } else if (p_ends(w, se, "ed") && p_has_vowel(w, se)) {
    w.resize(se);
    restore = true;
  } else if (p_ends(w, se, "ing") && p_has_vowel(w, se)) {
    w.resize(se);
    restore = true;
  }
  if (restore) {
    if (p_ends(w, se, "at") || p_ends(w, se, "bl") || p_ends(w, se, "iz")) {
      w += 'e';
    } else if (p_double_consonant(w, w.size())) {
      char c = w.back();
      if (c != 'l' && c != 's' && c != 'z') w.pop_back();
    } else if (p_measure(w, w.size()) == 1 && p_cvc(w, w.size())) {
      w += 'e';
    }
  }

  // Step 1c: terminal y after a vowel.
  if (p_ends(w, se, "y") && p_has_vowel(w, se)) w[se] = 'i';

  // Step 2: double to single suffixes (measure > 0).
  static constexpr std::pair<std::string_view, std::string_view> kStep2[] = {
      {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},
      {"anci", "ance"},   {"izer", "ize"},    {"abli", "able"},
      {"alli", "al"},     {"entli", "ent"},   {"eli", "e"},
      {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
      {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"},
      {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},
      {"iviti", "ive"},   {"biliti", "ble"},
  };
  for (const auto& [suf, to] : kStep2)
    if (p_rule(w, suf, to, 0)) break;

  // Step 3.
  static constexpr std::pair<std::string_view, std::string_view> kStep3[] = {
      {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
      {"ical", "ic"},  {"ful", ""},   {"ness", ""},
  };
  for (const auto& [suf, to] : kStep3)
    if (p_rule(w, suf, to, 0)) break;

  // Step 4: drop suffixes of long stems (measure > 1).
  static constexpr std::string_view kStep4[] = {
      "al",  "ance", "ence", "er",  "ic",  "able", "ible", "ant", "ement",
      "ment", "ent", "ion",  "ou",  "ism", "ate",  "iti",  "ous", "ive",
      "ize",
  };
  for (std::string_view suf : kStep4) {
    if (!p_ends(w, se, suf)) continue;
    if (suf == "ion" && !(se > 0 && (w[se - 1] == 's' || w[se - 1] == 't')))
      break;
    if (p_measure(w, se) > 1) w.resize(se);
    break;
  }

  // Step 5a: terminal e.
  if (p_ends(w, se, "e")) {
    int m = p_measure(w, se);
    if (m > 1 || (m == 1 && !p_cvc(w, se))) w.resize(se);
  }
  // Step 5b: -ll of long stems.
  if (w.size() >= 2 && w.back() == 'l' && p_double_consonant(w, w.size()) &&
      p_measure(w, w.size()) > 1)
    w.pop_back();

  return w;
}

// ---------------------------------------------------------------------------
// Shared n-gram and token helpers.

namespace {

using Tokens = std::vector<std::string>;
using Counts = std::unordered_map<std::string, double>;

Tokens toks(const std::string& s) { return text::metric_tokens(s); }

std::string gram_key(const Tokens& t, std::size_t i, int n) {
  std::string key = t[i];
  for (int k = 1; k < n; ++k) {
    key += '\x1f';
    key += t[i + k];
  }
  return key;
}

Counts ngram_counts(const Tokens& t, int n) {
  Counts c;
  if (static_cast<int>(t.size()) >= n)
    for (std::size_t i = 0; i + n <= t.size(); ++i) c[gram_key(t, i, n)] += 1;
  return c;
}

// Containment with the empty-candidate case pinned down: an empty token
// list only matches an empty one.
bool contains_run(const Tokens& hay, const Tokens& needle) {
  if (needle.empty()) return hay.empty();
  return text::contains_token_run(hay, needle);
}

void require_corpus(const std::vector<ScoredPair>& pairs) {
  if (pairs.empty()) throw SchemaError("metrics: empty corpus");
  for (const auto& p : pairs)
    if (p.references.empty())
      throw SchemaError("metrics: pair " + std::to_string(p.question_id) +
                        " has no references");
}

}  // namespace

// ---------------------------------------------------------------------------
// BLEU.

double bleu(const std::vector<ScoredPair>& pairs, int n) {
  require_corpus(pairs);
  if (n < 1 || n > 4) throw SchemaError("bleu: order must be in 1..4");

  std::vector<double> clipped(n + 1, 0.0), total(n + 1, 0.0);
  double cand_len = 0, ref_len = 0;

  for (const auto& p : pairs) {
    Tokens cand = toks(p.candidate);
    std::vector<Tokens> refs;
    refs.reserve(p.references.size());
    for (const auto& r : p.references) refs.push_back(toks(r));

    cand_len += static_cast<double>(cand.size());
    // Closest reference length; ties go to the shorter reference.
    std::size_t best = refs[0].size();
    for (const auto& r : refs) {
      auto diff = [&](std::size_t len) {
        return len > cand.size() ? len - cand.size() : cand.size() - len;
      };
      if (diff(r.size()) < diff(best) ||
          (diff(r.size()) == diff(best) && r.size() < best))
        best = r.size();
    }
    ref_len += static_cast<double>(best);

    for (int k = 1; k <= n; ++k) {
      Counts cc = ngram_counts(cand, k);
      Counts max_ref;
      for (const auto& r : refs)
        for (const auto& [g, cnt] : ngram_counts(r, k))
          max_ref[g] = std::max(max_ref[g], cnt);
      for (const auto& [g, cnt] : cc) {
        total[k] += cnt;
        auto it = max_ref.find(g);
        if (it != max_ref.end()) clipped[k] += std::min(cnt, it->second);
      }
    }
  }

  double log_sum = 0;
  for (int k = 1; k <= n; ++k) {
    if (total[k] == 0 || clipped[k] == 0) return 0.0;
    log_sum += std::log(clipped[k] / total[k]);
  }
  if (cand_len == 0) return 0.0;
  double bp = cand_len < ref_len ? std::exp(1.0 - ref_len / cand_len) : 1.0;
  return bp * std::exp(log_sum / n);
}

// ---------------------------------------------------------------------------
// METEOR (exact + stem stages only).

namespace {

double meteor_pair(const Tokens& cand, const Tokens& ref) {
  if (cand.empty() || ref.empty()) return 0.0;
  std::vector<int> match(cand.size(), -1);
  std::vector<bool> used(ref.size(), false);

  // Stage 1: exact surface matches, leftmost-first.
  for (std::size_t i = 0; i < cand.size(); ++i)
    for (std::size_t j = 0; j < ref.size(); ++j)
      if (!used[j] && ref[j] == cand[i]) {
        match[i] = static_cast<int>(j);
        used[j] = true;
        break;
      }
  // Stage 2: stem matches among the leftovers.
  std::vector<std::string> cand_stem(cand.size()), ref_stem(ref.size());
  for (std::size_t i = 0; i < cand.size(); ++i) cand_stem[i] = porter_stem(cand[i]);
  for (std::size_t j = 0; j < ref.size(); ++j) ref_stem[j] = porter_stem(ref[j]);
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (match[i] >= 0) continue;
    for (std::size_t j = 0; j < ref.size(); ++j)
      if (!used[j] && ref_stem[j] == cand_stem[i]) {
        match[i] = static_cast<int>(j);
        used[j] = true;
        break;
      }
  }

  int m = 0;
  for (int j : match)
    if (j >= 0) ++m;
  if (m == 0) return 0.0;

  double P = static_cast<double>(m) / static_cast<double>(cand.size());
  double R = static_cast<double>(m) / static_cast<double>(ref.size());
  double fmean = 10.0 * P * R / (R + 9.0 * P);

  // Chunks: maximal runs adjacent in both sentences.
  int chunks = 0;
  int prev_ref = -2;
  bool prev_matched = false;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (match[i] < 0) {
      prev_matched = false;
      continue;
    }
    if (!prev_matched || match[i] != prev_ref + 1) ++chunks;
    prev_ref = match[i];
    prev_matched = true;
  }

  double frag = static_cast<double>(chunks) / static_cast<double>(m);
  double penalty = 0.5 * frag * frag * frag;
  return fmean * (1.0 - penalty);
}

}  // namespace

double meteor(const std::vector<ScoredPair>& pairs) {
  require_corpus(pairs);
  double sum = 0;
  for (const auto& p : pairs) {
    Tokens cand = toks(p.candidate);
    double best = 0;
    for (const auto& r : p.references)
      best = std::max(best, meteor_pair(cand, toks(r)));
    sum += best;
  }
  return sum / static_cast<double>(pairs.size());
}

// ---------------------------------------------------------------------------
// CIDEr.

double cider(const std::vector<ScoredPair>& pairs) {
  require_corpus(pairs);
  const int kMaxN = 4;
  const double N = static_cast<double>(pairs.size());
  const double log_n_docs = std::log(std::max(N, 1.0));

  // Document frequency per order: in how many reference sets does each
  // n-gram appear.
  std::vector<Counts> df(kMaxN + 1);
  for (const auto& p : pairs) {
    for (int n = 1; n <= kMaxN; ++n) {
      Counts seen;
      for (const auto& r : p.references)
        for (const auto& [g, _] : ngram_counts(toks(r), n)) seen[g] = 1;
      for (const auto& [g, _] : seen) df[n][g] += 1;
    }
  }

  auto idf = [&](int n, const std::string& g) {
    auto it = df[n].find(g);
    double freq = it == df[n].end() ? 0.0 : it->second;
    return log_n_docs - std::log(std::max(1.0, freq));
  };

  auto weighted = [&](const Tokens& t, int n) {
    Counts vec = ngram_counts(t, n);
    for (auto& [g, v] : vec) v *= idf(n, g);
    return vec;
  };

  auto cosine = [](const Counts& a, const Counts& b) {
    double dot = 0, na = 0, nb = 0;
    for (const auto& [g, v] : a) {
      na += v * v;
      auto it = b.find(g);
      if (it != b.end()) dot += v * it->second;
    }
    for (const auto& [g, v] : b) nb += v * v;
    if (na == 0 || nb == 0) return 0.0;
    return dot / (std::sqrt(na) * std::sqrt(nb));
  };

  double corpus_sum = 0;
  for (const auto& p : pairs) {
    Tokens cand = toks(p.candidate);
    double item = 0;
    for (int n = 1; n <= kMaxN; ++n) {
      Counts cv = weighted(cand, n);
      double sim = 0;
      for (const auto& r : p.references) sim += cosine(cv, weighted(toks(r), n));
      item += sim / static_cast<double>(p.references.size());
    }
    corpus_sum += item / kMaxN;
  }
  return 10.0 * corpus_sum / N;
}

// ---------------------------------------------------------------------------
// VQA / FSVQA accuracy.

namespace {

// Extraction policy: modal reference first, then any present reference
// longest-first, else blank.
std::string extract_short(const Tokens& cand,
                          const std::vector<std::string>& short_refs) {
  std::map<std::string, int> counts;
  for (const auto& r : short_refs) ++counts[text::normalize_answer(r)];

  std::string modal;
  int best = -1;
  for (const auto& [form, n] : counts)
    if (n > best) {  // map order makes the tie pick lexicographic
      best = n;
      modal = form;
    }
  if (contains_run(cand, toks(modal))) return modal;

  std::vector<std::string> present;
  for (const auto& [form, _] : counts)
    if (form != modal && contains_run(cand, toks(form))) present.push_back(form);
  if (present.empty()) return "";
  std::sort(present.begin(), present.end(),
            [](const std::string& a, const std::string& b) {
              Tokens ta = toks(a), tb = toks(b);
              if (ta.size() != tb.size()) return ta.size() > tb.size();
              if (a.size() != b.size()) return a.size() > b.size();
              return a < b;
            });
  return present.front();
}

double vqa_item(const ScoredPair& p) {
  Tokens cand = toks(p.candidate);
  std::string extracted = extract_short(cand, *p.vqa_short_refs);
  if (extracted.empty()) return 0.0;
  int matching = 0;
  for (const auto& r : *p.vqa_short_refs)
    if (text::normalize_answer(r) == extracted) ++matching;
  return std::min(static_cast<double>(matching) / 3.0, 1.0);
}

bool fsvqa_hit(const ScoredPair& p) {
  Tokens cand = toks(p.candidate);
  for (const auto& r : p.references)
    if (contains_run(toks(r), cand)) return true;
  return false;
}

bool exact_hit(const ScoredPair& p) {
  Tokens cand = toks(p.candidate);
  for (const auto& r : p.references)
    if (toks(r) == cand) return true;
  return false;
}

}  // namespace

double vqa_accuracy(const std::vector<ScoredPair>& pairs) {
  require_corpus(pairs);
  double sum = 0;
  std::size_t n = 0;
  for (const auto& p : pairs) {
    if (!p.vqa_short_refs) continue;
    sum += vqa_item(p);
    ++n;
  }
  return n == 0 ? 0.0 : 100.0 * sum / static_cast<double>(n);
}

double fsvqa_accuracy(const std::vector<ScoredPair>& pairs) {
  require_corpus(pairs);
  std::size_t hits = 0;
  for (const auto& p : pairs)
    if (fsvqa_hit(p)) ++hits;
  return 100.0 * static_cast<double>(hits) / static_cast<double>(pairs.size());
}

double exact_match_rate(const std::vector<ScoredPair>& pairs) {
  require_corpus(pairs);
  std::size_t hits = 0;
  for (const auto& p : pairs)
    if (exact_hit(p)) ++hits;
  return 100.0 * static_cast<double>(hits) / static_cast<double>(pairs.size());
}

EvalReport evaluate(const std::vector<ScoredPair>& pairs) {
  EvalReport r;
  for (int n = 1; n <= 4; ++n) r.bleu[n - 1] = bleu(pairs, n);
  r.meteor = meteor(pairs);
  r.cider = cider(pairs);
  r.vqa_accuracy = vqa_accuracy(pairs);
  r.fsvqa_accuracy = fsvqa_accuracy(pairs);
  r.exact_match = exact_match_rate(pairs);
  return r;
}

std::string report_to_json(const EvalReport& r) {
  nlohmann::ordered_json j;
  j["bleu_1"] = r.bleu[0];
  j["bleu_2"] = r.bleu[1];
  j["bleu_3"] = r.bleu[2];
  j["bleu_4"] = r.bleu[3];
  j["meteor_lite"] = r.meteor;
  j["cider"] = r.cider;
  j["vqa_accuracy"] = r.vqa_accuracy;
  j["fsvqa_accuracy"] = r.fsvqa_accuracy;
  j["exact_match"] = r.exact_match;
  return j.dump(2);
}

std::string per_item_csv(const std::vector<ScoredPair>& pairs) {
  std::ostringstream os;
  os << "question_id,fsvqa_hit,exact_match,vqa_extraction,vqa_accuracy\n";
  for (const auto& p : pairs) {
    os << p.question_id << ',' << (fsvqa_hit(p) ? 1 : 0) << ','
       << (exact_hit(p) ? 1 : 0) << ',';
    if (p.vqa_short_refs) {
      std::string ex = extract_short(toks(p.candidate), *p.vqa_short_refs);
      os << '"' << ex << "\"," << vqa_item(p);
    } else {
      os << ",";
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace fsvqa
