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

#include <vector>

#include "fsvqa/metrics.hpp"

namespace fsvqa::testing {

// Twenty candidate/reference pairs with graded overlap, used both for the
// frozen-score checks and for the brute-force oracle comparison.
inline std::vector<ScoredPair> eval_fixture() {
  auto mk = [](std::int64_t id, std::string cand,
               std::vector<std::string> refs) {
    ScoredPair p;
    p.question_id = id;
    p.candidate = std::move(cand);
    p.references = std::move(refs);
    return p;
  };
  return {
      mk(1, "Yes, he got hurt.", {"Yes, he got hurt."}),
      mk(2, "No, she is happy.", {"No, she is not happy."}),
      mk(3, "There are 2 pens on the desk.",
         {"There are 2 pens.", "There are two pens on the desk."}),
      mk(4, "3 people are walking.", {"3 people are walking."}),
      mk(5, "He has 4 pens.", {"He has 4 pens.", "He has four pens."}),
      mk(6, "They are teachers.", {"They are students."}),
      mk(7, "Apple is on the table.",
         {"Apple is on the table.", "An apple is on the table."}),
      mk(8, "Left hand is holding it.", {"Left hand is holding it."}),
      mk(9, "Dog would like this.",
         {"Dog would like this.", "A dog would like this."}),
      mk(10, "The man would eat bread.", {"The man would eat apple."}),
      mk(11, "Pitcher threw the ball.", {"Pitcher threw the ball."}),
      mk(12, "The man is eating apple.", {"The man is eating apple."}),
      mk(13, "Yes, it looks like a man.", {"Yes, it looks like a man."}),
      mk(14, "No, a dog did not jump.",
         {"No, a dog did not jump.", "No, the dog did not jump."}),
      mk(15, "A boy is running fast.",
         {"A boy is running.", "A boy runs quickly."}),
      mk(16, "There are six cars.",
         {"Six cars are parked.", "There are six cars parked."}),
      mk(17, "People are making coffee.",
         {"No, people are not making coffee."}),
      mk(18, "The birds are sitting on the tree.",
         {"The birds are sitting on the tree."}),
      mk(19, "Dogs run in a park.",
         {"Dogs run in a park.", "Dogs are running in a park."}),
      mk(20, "Yes, there are cats.", {"Yes, there are cats."}),
  };
}

}  // namespace fsvqa::testing
