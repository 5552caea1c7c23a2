// Copyright 2026 The Selective Context Authors.
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

#include "selective_context/segmentation/pos_tagger.h"

#include <initializer_list>
#include <string>

#include "absl/container/flat_hash_map.h"
#include "absl/container/flat_hash_set.h"
#include "selective_context/segmentation/unicode_text.h"

namespace selective_context {
namespace {

using Lexicon = absl::flat_hash_map<std::string, PosTag>;

void AddAll(Lexicon& lexicon, PosTag tag,
            std::initializer_list<const char*> words) {
  for (const char* w : words) lexicon.emplace(w, tag);
}

const Lexicon& ClosedClass() {
  static const Lexicon* const kLexicon = [] {
    auto* l = new Lexicon();
    AddAll(
        *l, PosTag::kDet,
        {"a",    "an",   "the",     "this",  "that", "these",    "those",
         "my",   "your", "his",     "her",   "its",  "our",      "their",
         "some", "any",  "no",      "every", "each", "either",   "neither",
         "all",  "both", "another", "such",  "what", "whatever", "whichever"});
    AddAll(*l, PosTag::kPron,
           {"i",          "you",       "he",         "she",      "it",
            "we",         "they",      "me",         "him",      "us",
            "them",       "myself",    "yourself",   "himself",  "herself",
            "itself",     "ourselves", "themselves", "who",      "whom",
            "whose",      "which",     "mine",       "yours",    "hers",
            "ours",       "theirs",    "something",  "anything", "nothing",
            "everything", "someone",   "anyone",     "everyone", "nobody"});
    AddAll(*l, PosTag::kAdp,
           {"of",      "in",      "on",      "at",      "by",         "for",
            "with",    "from",    "to",      "into",    "onto",       "over",
            "under",   "about",   "across",  "after",   "before",     "between",
            "among",   "through", "during",  "without", "within",     "against",
            "along",   "around",  "behind",  "below",   "beneath",    "beside",
            "besides", "beyond",  "despite", "except",  "inside",     "near",
            "off",     "out",     "outside", "per",     "since",      "than",
            "toward",  "towards", "upon",    "via",     "throughout", "like"});
    AddAll(*l, PosTag::kCconj, {"and", "or", "but", "nor", "yet"});
    AddAll(*l, PosTag::kSconj,
           {"if", "because", "although", "though", "while", "whereas", "unless",
            "until", "whether", "when", "where", "how", "why"});
    AddAll(
        *l, PosTag::kAux,
        {"is",    "are",    "was", "were",  "be",   "been",  "being", "am",
         "have",  "has",    "had", "do",    "does", "did",   "will",  "would",
         "shall", "should", "can", "could", "may",  "might", "must"});
    AddAll(*l, PosTag::kPart, {"not", "n't", "'s"});
    AddAll(*l, PosTag::kNum,
           {"zero", "one", "two", "three", "four", "five", "six", "seven",
            "eight", "nine", "ten", "eleven", "twelve", "twenty", "thirty",
            "hundred", "thousand", "million", "billion"});
    return l;
  }();
  return *kLexicon;
}

const Lexicon& OpenClass() {
  static const Lexicon* const kLexicon = [] {
    auto* l = new Lexicon();
    AddAll(
        *l, PosTag::kAdv,
        {"also",        "very",  "then",    "now",     "just",      "only",
         "even",        "still", "already", "often",   "never",     "always",
         "here",        "there", "thus",    "however", "therefore", "moreover",
         "furthermore", "too",   "quite",   "rather",  "almost",    "again",
         "soon",        "well",  "instead", "perhaps", "so"});
    AddAll(*l, PosTag::kAdj,
           {"quick",     "slow",       "new",      "old",       "good",
            "bad",       "great",      "small",    "large",     "big",
            "little",    "long",       "short",    "high",      "low",
            "different", "same",       "other",    "many",      "more",
            "most",      "few",        "less",     "least",     "several",
            "various",   "important",  "possible", "able",      "real",
            "main",      "whole",      "full",     "free",      "early",
            "late",      "recent",     "next",     "last",      "first",
            "second",    "third",      "own",      "certain",   "clear",
            "simple",    "difficult",  "hard",     "easy",      "strong",
            "weak",      "key",        "major",    "minor",     "public",
            "general",   "specific",   "special",  "common",    "single",
            "multiple",  "particular", "previous", "similar",   "best",
            "better",    "worse",      "ideal",    "promising", "unique",
            "advanced",  "continual",  "brown",    "lazy",      "red",
            "blue",      "green",      "black",    "white",     "young"});
    AddAll(*l, PosTag::kVerb,
           {"was",        "made",   "took",    "gave",    "got",   "went",
            "came",       "saw",    "knew",    "thought", "said",  "found",
            "told",       "felt",   "left",    "kept",    "began", "shown",
            "brought",    "wrote",  "written", "built",   "held",  "led",
            "met",        "paid",   "ran",     "sat",     "stood", "lost",
            "understood", "spent",  "grew",    "won",     "sent",  "fell",
            "chose",      "known",  "taken",   "given",   "seen",  "done",
            "gone",       "become", "became"});
    return l;
  }();
  return *kLexicon;
}

const absl::flat_hash_set<std::string>& VerbStems() {
  static const auto* const kStems = new absl::flat_hash_set<std::string>{
      "make",    "take",        "give",        "get",      "go",
      "come",    "see",         "know",        "think",    "say",
      "use",     "find",        "want",        "tell",     "ask",
      "work",    "seem",        "feel",        "try",      "leave",
      "call",    "need",        "keep",        "let",      "begin",
      "show",    "hear",        "play",        "run",      "move",
      "live",    "believe",     "bring",       "happen",   "write",
      "provide", "sit",         "stand",       "lose",     "pay",
      "meet",    "include",     "continue",    "set",      "learn",
      "change",  "lead",        "understand",  "watch",    "follow",
      "stop",    "create",      "speak",       "read",     "allow",
      "add",     "spend",       "grow",        "walk",     "win",
      "offer",   "remember",    "love",        "consider", "appear",
      "buy",     "wait",        "serve",       "die",      "send",
      "expect",  "build",       "stay",        "fall",     "cut",
      "reach",   "kill",        "remain",      "suggest",  "raise",
      "pass",    "sell",        "require",     "report",   "decide",
      "pull",    "jump",        "propose",     "train",    "evaluate",
      "perform", "design",      "adopt",       "enhance",  "deal",
      "sample",  "start",       "challenge",   "compute",  "merge",
      "filter",  "remove",      "retain",      "reduce",   "achieve",
      "improve", "compare",     "apply",       "test",     "describe",
      "present", "produce",     "contain",     "obtain",   "introduce",
      "process", "generate",    "predict",     "measure",  "represent",
      "define",  "demonstrate", "observe",     "focus",    "employ",
      "study",   "explore",     "investigate", "develop",  "address",
      "solve",   "support",     "arrive",      "bark",     "sleep",
      "eat",     "drink",       "look",        "turn",     "help",
      "open",    "close",       "return",      "receive",  "accept",
      "enable",  "prune",       "score"};
  return *kStems;
}

bool IsVerbStem(const std::string& stem) {
  return !stem.empty() && VerbStems().contains(stem);
}

// Base form, -s/-es, -ed/-d, -ing, with e-dropping and consonant doubling.
bool IsVerbForm(const std::string& w) {
  if (IsVerbStem(w)) return true;
  auto strip = [&](std::string_view suffix) -> std::string {
    if (w.size() <= suffix.size() + 1 || !w.ends_with(suffix)) return "";
    return w.substr(0, w.size() - suffix.size());
  };
  for (std::string_view suffix : {"s", "es", "ed", "d", "ing"}) {
    std::string stem = strip(suffix);
    if (stem.empty()) continue;
    if (IsVerbStem(stem)) return true;
    if ((suffix == "ing" || suffix == "ed") && IsVerbStem(stem + "e")) {
      return true;
    }
    if ((suffix == "ing" || suffix == "ed") && stem.size() >= 2 &&
        stem[stem.size() - 1] == stem[stem.size() - 2] &&
        IsVerbStem(stem.substr(0, stem.size() - 1))) {
      return true;
    }
    if (suffix == "ed" && stem.ends_with('i') &&
        IsVerbStem(stem.substr(0, stem.size() - 1) + "y")) {
      return true;
    }
    if (suffix == "es" && stem.ends_with('i') &&
        IsVerbStem(stem.substr(0, stem.size() - 1) + "y")) {
      return true;
    }
  }
  return false;
}

bool HasAdjectiveSuffix(const std::string& w) {
  if (w.size() < 6) return false;
  for (std::string_view suffix :
       {"ous", "ful", "ive", "able", "ible", "less", "ical", "ish"}) {
    if (w.ends_with(suffix)) return true;
  }
  return false;
}

bool IsNumeric(std::string_view w) {
  if (w.empty() || !IsDigit(DecodeAt(w, 0).value)) return false;
  for (size_t i = 0; i < w.size();) {
    const CodePoint cp = DecodeAt(w, i);
    if (!IsDigit(cp.value) && cp.value != U'.' && cp.value != U',' &&
        cp.value != U'%') {
      return false;
    }
    i = cp.end;
  }
  return true;
}

}  // namespace

std::string_view PosTagName(PosTag tag) {
  switch (tag) {
    case PosTag::kNoun:
      return "NOUN";
    case PosTag::kPropn:
      return "PROPN";
    case PosTag::kVerb:
      return "VERB";
    case PosTag::kAux:
      return "AUX";
    case PosTag::kAdj:
      return "ADJ";
    case PosTag::kAdv:
      return "ADV";
    case PosTag::kAdp:
      return "ADP";
    case PosTag::kDet:
      return "DET";
    case PosTag::kPron:
      return "PRON";
    case PosTag::kCconj:
      return "CCONJ";
    case PosTag::kSconj:
      return "SCONJ";
    case PosTag::kPart:
      return "PART";
    case PosTag::kNum:
      return "NUM";
    case PosTag::kPunct:
      return "PUNCT";
  }
  return "?";
}

std::vector<PosTag> TagSentence(const std::vector<std::string_view>& tokens) {
  std::vector<PosTag> tags(tokens.size(), PosTag::kNoun);
  std::vector<std::string> lower(tokens.size());
  size_t first_word = tokens.size();
  for (size_t i = 0; i < tokens.size(); ++i) {
    lower[i] = ToLowerUtf8(tokens[i]);
    if (first_word == tokens.size() && !IsAllPunctuation(tokens[i])) {
      first_word = i;
    }
  }
  auto closed_class = [&](size_t i) {
    return ClosedClass().contains(lower[i]);
  };
  auto next_word = [&](size_t i) {
    for (size_t j = i + 1; j < tokens.size(); ++j) {
      if (!IsAllPunctuation(tokens[j])) return j;
    }
    return tokens.size();
  };

  for (size_t i = 0; i < tokens.size(); ++i) {
    const std::string_view word = tokens[i];
    const std::string& lw = lower[i];
    if (IsAllPunctuation(word)) {
      tags[i] = PosTag::kPunct;
      continue;
    }
    if (IsNumeric(word)) {
      tags[i] = PosTag::kNum;
      continue;
    }
    if (auto it = ClosedClass().find(lw); it != ClosedClass().end()) {
      tags[i] = it->second;
      continue;
    }
    if (StartsUppercase(word)) {
      if (i != first_word) {
        tags[i] = PosTag::kPropn;
        continue;
      }
      // A capitalized sentence opener is a name when a name follows it.
      const size_t j = next_word(i);
      if (j < tokens.size() && StartsUppercase(tokens[j]) && !closed_class(j)) {
        tags[i] = PosTag::kPropn;
        continue;
      }
    }
    if (auto it = OpenClass().find(lw); it != OpenClass().end()) {
      tags[i] = it->second;
    } else if (IsVerbForm(lw)) {
      tags[i] = PosTag::kVerb;
    } else if (lw.size() > 4 && lw.ends_with("ly")) {
      tags[i] = PosTag::kAdv;
    } else if (HasAdjectiveSuffix(lw)) {
      tags[i] = PosTag::kAdj;
    } else {
      tags[i] = PosTag::kNoun;
    }
  }
  return tags;
}

std::vector<PosTag> TagDocument(const SegmentedDocument& doc) {
  std::vector<PosTag> tags;
  tags.reserve(doc.tokens.size());
  for (const TokenRange& range : doc.sentence_tokens) {
    std::vector<std::string_view> words;
    for (size_t t = range.begin; t < range.end; ++t) {
      words.push_back(doc.tokens[t].text);
    }
    for (PosTag tag : TagSentence(words)) tags.push_back(tag);
  }
  return tags;
}

}  // namespace selective_context
