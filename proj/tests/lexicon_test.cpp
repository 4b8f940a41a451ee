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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>

#include "doctest.h"
#include "fsvqa/cap2qa.hpp"
#include "fsvqa/lexicon.hpp"

using namespace fsvqa;

namespace {
const std::filesystem::path kData = FSVQA_DATA_DIR;
}

TEST_CASE("lexicon loads the shipped word lists") {
  Lexicon lex = Lexicon::load(kData);
  CHECK(lex.closed_class_size() > 200);
  CHECK(lex.verb_count() == 250);

  CHECK(lex.closed_class("the") == Tag::DT);
  CHECK(lex.closed_class("he") == Tag::PRP);
  CHECK(lex.closed_class("there") == Tag::EX);
  CHECK(lex.closed_class("who") == Tag::WP);
  CHECK(lex.closed_class("which") == Tag::WDT);
  CHECK(lex.closed_class("how") == Tag::WRB);
  CHECK(lex.closed_class("many") == Tag::JJ);
  CHECK(lex.closed_class("would") == Tag::MD);
  CHECK(lex.closed_class("is") == Tag::VBZ);
  CHECK(lex.closed_class("notaword") == std::nullopt);

  const VerbEntry* v = lex.verb_by_lemma("throw");
  REQUIRE(v != nullptr);
  CHECK(v->past == "threw");
  CHECK(v->participle == "thrown");
  CHECK(v->third_sg == "throws");
  CHECK(lex.verb_by_form("threw") == v);
  CHECK(lex.verb_by_form("thrown") == v);
}

TEST_CASE("auxiliary form sets") {
  CHECK(Lexicon::is_be_form("are"));
  CHECK(Lexicon::is_be_form("being"));
  CHECK_FALSE(Lexicon::is_be_form("bee"));
  CHECK(Lexicon::is_do_form("does"));
  CHECK(Lexicon::is_have_form("had"));
  CHECK(Lexicon::is_will_form("will"));
  CHECK(Lexicon::subject_case("them") == "they");
  CHECK(Lexicon::subject_case("me") == "I");
  CHECK(Lexicon::subject_case("they") == std::nullopt);
}

TEST_CASE("substitution lists validate their sizes") {
  SubstitutionLists lists =
      SubstitutionLists::load(kData / "agents.txt", kData / "actions.txt");
  CHECK(lists.agents.size() == 1000);
  CHECK(lists.actions.size() == 121);

  std::filesystem::path bad =
      std::filesystem::temp_directory_path() / "fsvqa_bad_agents.txt";
  {
    std::ofstream os(bad);
    os << "only\none\nclass\n";
  }
  CHECK_THROWS_AS(SubstitutionLists::load(bad, kData / "actions.txt"),
                  SchemaError);
  std::filesystem::remove(bad);
}

TEST_CASE("category lexicons") {
  CategoryLexicons cats = CategoryLexicons::load(kData / "categories.tsv");
  CHECK(cats.member_count() > 150);

  const auto* apple = cats.find("apple");
  REQUIRE(apple != nullptr);
  CHECK(apple->category == "food");
  CHECK(apple->label == "fruit");

  const auto* red = cats.find("red");
  REQUIRE(red != nullptr);
  CHECK(red->category == "color");
  CHECK(red->label == "color");

  CHECK(cats.find("xylophone") == nullptr);

  std::filesystem::path bad =
      std::filesystem::temp_directory_path() / "fsvqa_bad_cats.tsv";
  {
    std::ofstream os(bad);
    os << "color\tred\ncolor\tred\n";
  }
  CHECK_THROWS_AS(CategoryLexicons::load(bad), SchemaError);
  {
    std::ofstream os(bad);
    os << "weather\tsunny\n";
  }
  CHECK_THROWS_AS(CategoryLexicons::load(bad), SchemaError);
  std::filesystem::remove(bad);
}
