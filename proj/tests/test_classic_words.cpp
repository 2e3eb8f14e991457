/*
 * Copyright 2026 The morphlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include "morphlab/classic_words.hpp"
#include "morphlab/error.hpp"
#include "morphlab/interference.hpp"
#include "oracles.hpp"

using namespace morphlab;

TEST(Fibonacci, MatchesIteration) {
  EXPECT_EQ(fibonacci_word(1).str(), "b");
  EXPECT_EQ(fibonacci_word(2).str(), "a");
  EXPECT_EQ(fibonacci_word(6).str(), "abaababa");
  for (std::size_t i = 1; i <= 25; ++i) {
    const Word f = fibonacci_word(i);
    ASSERT_EQ(f.str(), oracle::fibonacci(i)) << i;
    ASSERT_EQ(f.size(), fibonacci_number(i)) << i;
  }
  EXPECT_EQ(fibonacci_number(30), 832040u);
}

TEST(ThueMorse, MatchesIteration) {
  EXPECT_EQ(thue_morse_word(1).str(), "a");
  EXPECT_EQ(thue_morse_word(4).str(), "abbabaab");
  for (std::size_t i = 1; i <= 20; ++i) {
    const Word t = thue_morse_word(i);
    ASSERT_EQ(t.str(), oracle::thue_morse(i)) << i;
    ASSERT_EQ(t.size(), std::size_t{1} << (i - 1));
    if (i >= 2) ASSERT_EQ(t, thue_morse_word(i - 1) + flip(thue_morse_word(i - 1)));
  }
}

TEST(Orders, OutOfRange) {
  for (auto fn : {+[] { fibonacci_word(0); }, +[] { fibonacci_word(31); }, +[] { thue_morse_word(0); },
                  +[] { thue_morse_word(23); }, +[] { fibonacci_G(2); }}) {
    try {
      fn();
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kOutOfRange);
    }
  }
  EXPECT_EQ(fibonacci_word(32, 40).size(), fibonacci_number(32));
}

TEST(Fibonacci, GAndDelta) {
  EXPECT_EQ(fibonacci_G(6).str(), "abaaba");
  EXPECT_EQ(fibonacci_delta(6).str(), "ba");
  EXPECT_EQ(fibonacci_G(5).str(), "aba");
  EXPECT_EQ(fibonacci_delta(5).str(), "ab");
  for (std::size_t i = 3; i <= 20; ++i) ASSERT_EQ(fibonacci_G(i) + fibonacci_delta(i), fibonacci_word(i)) << i;
}

TEST(Extensions, FourWords) {
  const auto e = extensions(Word::parse(Alphabet::binary(), "ab"));
  std::vector<std::string> got;
  for (const auto& w : e) got.push_back(w.str());
  EXPECT_EQ(got, (std::vector<std::string>{"aaba", "aabb", "baba", "babb"}));
  EXPECT_THROW(extensions(Word::parse(Alphabet::create("abc"), "c")), Error);
}

TEST(Structural, AllPass) {
  const auto r = structural_checks(20);
  EXPECT_TRUE(r.passed());
  EXPECT_GE(r.instances.size(), 18u);
}

TEST(IfParity, AllPass) {
  const auto r = verify_if_parity(22, 14);
  for (const auto& i : r.instances) EXPECT_TRUE(i.passed) << i.label << " " << i.detail;
  EXPECT_THROW(verify_if_parity(4, 10), Error);
}

TEST(IfParity, DirectSpotChecks) {
  const auto& fib = fibonacci_morphism();
  for (std::size_t i = 4; i <= 16; ++i) {
    EXPECT_EQ(is_interference_free_on(fib, fibonacci_word(i)).interference_free, i % 2 == 0) << i;
  }
  const auto& mu = thue_morse_morphism();
  for (std::size_t i = 4; i <= 12; ++i) {
    EXPECT_TRUE(is_interference_free_on(mu, thue_morse_word(i)).interference_free) << i;
    EXPECT_TRUE(is_interference_free_on(mu, flip(thue_morse_word(i))).interference_free) << i;
  }
  EXPECT_FALSE(is_interference_free_on(mu, Word::parse(mu.source(), "aa")).interference_free);
}

TEST(Named, CatalogueOrderAndLookup) {
  const auto& all = named_morphisms();
  std::vector<std::string> names;
  for (const auto& n : all) names.push_back(n.name);
  EXPECT_EQ(names, (std::vector<std::string>{"fibonacci", "thue-morse", "variant-thue-morse", "mephisto-waltz",
                                             "thue-morse-morse", "last-nonzero-digit"}));
  EXPECT_EQ(named_morphism("fibonacci").to_string(), fibonacci_morphism().to_string());
  EXPECT_EQ(fibonacci_morphism().to_string(), "a->ab;b->a");
  EXPECT_EQ(thue_morse_morphism().to_string(), "a->ab;b->ba");
  for (const auto& n : all) {
    EXPECT_TRUE(n.morphism.is_injective()) << n.name;
    EXPECT_TRUE(n.morphism.is_endomorphism()) << n.name;
  }
  EXPECT_THROW(named_morphism("nope"), Error);
}
