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

#include <set>

#include "morphlab/error.hpp"
#include "morphlab/matcher.hpp"
#include "oracles.hpp"

using namespace morphlab;

namespace {

std::vector<std::pair<std::size_t, std::uint32_t>> matches(const DictionaryMatcher& m, const Word& w) {
  std::vector<std::pair<std::size_t, std::uint32_t>> out;
  m.for_each_match(w.symbols(), [&](std::size_t end, std::uint32_t id) { out.emplace_back(end, id); });
  std::sort(out.begin(), out.end());
  return out;
}

DictionaryMatcher build(const std::vector<Word>& patterns) {
  std::vector<DictionaryMatcher::Pattern> ps;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    ps.push_back({patterns[i].symbols(), static_cast<std::uint32_t>(i)});
  }
  return DictionaryMatcher::build(ps);
}

Word W(const char* s) { return Word::parse(Alphabet::binary(), s); }

}  // namespace

TEST(DictionaryMatcher, HandSimulations) {
  // Matches are reported by 0-based end index.
  const auto m1 = build({W("ab"), W("a")});
  EXPECT_EQ(matches(m1, W("aba")),
            (std::vector<std::pair<std::size_t, std::uint32_t>>{{0, 1}, {1, 0}, {2, 1}}));
  EXPECT_TRUE(matches(build({W("ab")}), W("bbb")).empty());
  const auto m2 = build({W("ab"), W("ba")});
  EXPECT_EQ(matches(m2, W("aba")), (std::vector<std::pair<std::size_t, std::uint32_t>>{{1, 0}, {2, 1}}));
}

TEST(DictionaryMatcher, RejectsEmptyInput) {
  try {
    build({W("ab"), Word(Alphabet::binary())});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kErasingImage);
  }
  EXPECT_THROW(build({}), Error);
}

TEST(DictionaryMatcher, FailureLinksPointToLongestSuffixPrefix) {
  const std::vector<Word> pats{W("abab"), W("bab"), W("aab"), W("b")};
  const auto m = build(pats);
  EXPECT_EQ(m.failure(DictionaryMatcher::kRoot), DictionaryMatcher::kRoot);
  // Every node is reached by some prefix; recompute its failure by brute force.
  std::set<std::string> prefixes;
  for (const auto& p : pats) {
    for (std::size_t k = 1; k <= p.size(); ++k) prefixes.insert(p.substr(0, k).str());
  }
  for (const auto& s : prefixes) {
    const auto q = m.run(W(s.c_str()).symbols());
    ASSERT_EQ(m.depth(q), s.size());
    std::size_t expect = 0;
    for (std::size_t k = s.size() - 1; k > 0; --k) {
      if (prefixes.count(s.substr(s.size() - k))) {
        expect = k;
        break;
      }
    }
    EXPECT_EQ(m.depth(m.failure(q)), expect) << s;
    EXPECT_LT(m.depth(m.failure(q)), m.depth(q));
  }
}

TEST(Scan, Examples) {
  const auto fib = Morphism::parse("a->ab;b->a");
  const auto s = scan(fib, Word::parse(fib.target(), "aba"));
  EXPECT_EQ(s.at(1), (std::vector<Symbol>{0, 1}));
  EXPECT_TRUE(s.at(2).empty());
  EXPECT_EQ(s.at(3), (std::vector<Symbol>{1}));
  EXPECT_EQ(s.proper_prefix_suffixes, (std::vector<std::size_t>{3}));
  EXPECT_EQ(s.occ_total, 3u);
  const auto t = scan(fib, Word::parse(fib.target(), "ba"));
  EXPECT_EQ(t.proper_suffix_prefixes, (std::vector<std::size_t>{1}));
}

TEST(Scan, RequiresTargetAlphabet) {
  const auto m = Morphism::parse("a->c;b->cc");
  EXPECT_THROW(scan(m, Word::parse(Alphabet::binary(), "ab")), Error);
}

TEST(Scan, MatchesNaiveDefinitionsExhaustively) {
  for (const auto& images : oracle::binary_morphisms(2, 3)) {
    const auto phi = Morphism::parse(oracle::spec(images));
    const ImageScanner scanner(phi);
    for (const auto& w : oracle::all_words(2, 1, 10)) {
      if (!phi.target()->index_of('b') && w.find('b') != std::string::npos) continue;
      if (!phi.target()->index_of('a') && w.find('a') != std::string::npos) continue;
      const auto got = scanner.scan(Word::parse(phi.target(), w));
      const auto want = oracle::scan(images, w);
      std::size_t total = 0;
      for (std::size_t i = 1; i <= w.size(); ++i) {
        std::set<char> s;
        for (Symbol c : got.at(i)) s.insert(static_cast<char>('a' + c));
        ASSERT_EQ(s, want.starts[i - 1]) << oracle::spec(images) << " " << w << " i=" << i;
        total += s.size();
      }
      ASSERT_EQ(got.proper_suffix_prefixes, want.p_pref) << oracle::spec(images) << " " << w;
      ASSERT_EQ(got.proper_prefix_suffixes, want.p_suf) << oracle::spec(images) << " " << w;
      ASSERT_EQ(got.occ_total, total);
      std::size_t via_occ = 0;
      for (const auto& x : images) via_occ += oracle::occ(x, w);
      ASSERT_EQ(got.occ_total, via_occ);
    }
  }
}
