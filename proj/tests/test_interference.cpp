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

#include <random>

#include "morphlab/classic_words.hpp"
#include "morphlab/error.hpp"
#include "morphlab/interference.hpp"
#include "oracles.hpp"

using namespace morphlab;

namespace {

Word src(const Morphism& m, const std::string& s) { return Word::parse(m.source(), s); }
Word tgt(const Morphism& m, const std::string& s) { return Word::parse(m.target(), s); }

const InterferedFactorization& interfered(const IfDecision& d) {
  return std::get<InterferedFactorization>(*d.witness);
}

}  // namespace

TEST(Factorizable, Examples) {
  const auto& fib = fibonacci_morphism();
  const auto& mu = thue_morse_morphism();
  const auto r1 = factorizable(fib, tgt(fib, "aba"));
  ASSERT_TRUE(r1.factorizable);
  EXPECT_EQ(r1.witness->x_length, 0u);
  EXPECT_EQ(r1.witness->y_images, (std::vector<Symbol>{0}));
  EXPECT_EQ(r1.witness->z_length, 1u);

  const auto r2 = factorizable(mu, tgt(mu, "abab"));
  ASSERT_TRUE(r2.factorizable);
  EXPECT_EQ(r2.witness->x_length, 1u);
  EXPECT_EQ(r2.witness->y_images, (std::vector<Symbol>{1}));
  EXPECT_EQ(r2.witness->z_length, 1u);

  const auto r3 = factorizable(mu, tgt(mu, "abba"));
  EXPECT_FALSE(r3.factorizable);
  EXPECT_TRUE(r3.reachable[0]);
  EXPECT_TRUE(r3.reachable[4]);
}

TEST(Factorizable, Errors) {
  const auto e = Morphism::parse("a->ab;b->.");
  EXPECT_THROW(factorizable(e, tgt(e, "ab")), Error);
  EXPECT_THROW(factorizable(fibonacci_morphism(), Word(Alphabet::binary())), Error);
}

TEST(InnerImageFactor, Examples) {
  const auto& v = named_morphism("variant-thue-morse");
  const auto inner = find_inner_image_factor(v, tgt(v, "b"));
  ASSERT_TRUE(inner.has_value());
  EXPECT_EQ(inner->host, 0);
  EXPECT_EQ(inner->offset, 2u);
  EXPECT_FALSE(is_inner_image_factor(fibonacci_morphism(), tgt(fibonacci_morphism(), "a")));
  EXPECT_FALSE(is_inner_image_factor(thue_morse_morphism(), tgt(thue_morse_morphism(), "ab")));
}

TEST(InterferenceFree, ClassicInstances) {
  const auto& fib = fibonacci_morphism();
  const auto& mu = thue_morse_morphism();
  const auto d = is_interference_free_on(fib, src(fib, "abaab"));
  ASSERT_FALSE(d.interference_free);
  const auto& f = interfered(d);
  EXPECT_TRUE(f.x.empty());
  EXPECT_EQ(Word(fib.source(), f.y_images).str(), "abaa");
  EXPECT_EQ(f.z.str(), "a");
  EXPECT_EQ(f.donor_z, Symbol{0});
  EXPECT_TRUE(is_interference_free_on(fib, src(fib, "aba")).interference_free);
  EXPECT_TRUE(is_interference_free_on(mu, src(mu, "abbabaab")).interference_free);
  EXPECT_FALSE(is_interference_free_on(mu, src(mu, "aa")).interference_free);
}

TEST(InterferenceFree, WitnessFromMirroredPass) {
  // phi(b) = a is a proper suffix of phi(a) but no proper prefix of an
  // image ends it, so only the mirrored pass fires.
  const auto phi = Morphism::parse("a->ba;b->a");
  const auto d = is_interference_free_on(phi, src(phi, "b"));
  ASSERT_FALSE(d.interference_free);
  const auto& f = interfered(d);
  EXPECT_EQ(f.x.str(), "a");
  EXPECT_TRUE(f.y_images.empty());
  EXPECT_TRUE(f.z.empty());
  EXPECT_EQ(f.donor_x, Symbol{0});
  EXPECT_TRUE(witness_is_valid(phi, apply(phi, src(phi, "b")), *d.witness));
}

TEST(InterferenceFree, InnerWitness) {
  const auto& v = named_morphism("variant-thue-morse");
  const auto d = is_interference_free_on(v, src(v, "c"));
  ASSERT_FALSE(d.interference_free);
  const auto* inner = std::get_if<InnerImageFactor>(&*d.witness);
  ASSERT_NE(inner, nullptr);
  EXPECT_EQ(inner->host, 0);
  EXPECT_EQ(inner->offset, 2u);
}

TEST(InterferenceFree, Preconditions) {
  const auto bad = Morphism::parse("a->a;b->aa");
  try {
    is_interference_free_on(bad, src(bad, "a"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotInjective);
  }
  const auto forced = is_interference_free_on(bad, src(bad, "a"), IfOptions{true});
  EXPECT_TRUE(forced.precondition_violated);
  try {
    is_interference_free_on(fibonacci_morphism(), Word(Alphabet::binary()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyWord);
  }
}

TEST(InterferenceFree, Language) {
  const auto& fib = fibonacci_morphism();
  const std::vector<Word> even{fibonacci_word(4), fibonacci_word(6)};
  EXPECT_TRUE(is_interference_free_on(fib, even).interference_free);
  const std::vector<Word> mixed{fibonacci_word(4), fibonacci_word(5)};
  EXPECT_FALSE(is_interference_free_on(fib, mixed).interference_free);
  EXPECT_TRUE(is_interference_free_on(fib, std::span<const Word>{}).interference_free);
}

TEST(InterferenceFree, AgreesWithNaiveOnSmallSweep) {
  const auto words = oracle::all_words(2, 1, 4);
  for (const auto& images : oracle::binary_morphisms(2, 3)) {
    const auto phi = Morphism::parse(oracle::spec(images));
    if (!phi.is_injective()) continue;
    const InterferenceChecker checker(phi);
    for (const auto& u : words) {
      const auto d = checker.check(src(phi, u));
      ASSERT_EQ(d.interference_free, oracle::interference_free(images, u)) << oracle::spec(images) << " u=" << u;
      if (!d.interference_free) {
        ASSERT_TRUE(witness_is_valid(phi, apply(phi, src(phi, u)), *d.witness)) << oracle::spec(images) << " " << u;
      }
    }
  }
}

TEST(StrongIf, Classification) {
  for (const char* name : {"mephisto-waltz", "thue-morse-morse", "last-nonzero-digit"}) {
    EXPECT_TRUE(is_strongly_interference_free(named_morphism(name)).strongly_interference_free) << name;
  }
  const auto fib = is_strongly_interference_free(fibonacci_morphism());
  EXPECT_FALSE(fib.strongly_interference_free);
  EXPECT_EQ(fib.failing_symbol, Symbol{1});
  const auto mu = is_strongly_interference_free(thue_morse_morphism());
  EXPECT_FALSE(mu.strongly_interference_free);
  EXPECT_EQ(mu.failing_symbol, Symbol{0});
}

TEST(StrongIf, ImpliesIfOnRandomWords) {
  std::mt19937_64 rng(13);
  for (const char* name : {"mephisto-waltz", "thue-morse-morse", "last-nonzero-digit"}) {
    const auto& phi = named_morphism(name);
    const InterferenceChecker checker(phi);
    for (int k = 0; k < 200; ++k) {
      const auto u = oracle::random_word(rng, 2, 1, 32);
      EXPECT_TRUE(checker.check(src(phi, u)).interference_free) << name << " " << u;
    }
  }
}

TEST(Barrier, Certificates) {
  const auto& mu = thue_morse_morphism();
  const auto tm = barrier_certificate(mu, thue_morse_word(4));
  ASSERT_TRUE(tm.has_value());
  EXPECT_EQ(tm->left.str(), "ab");
  EXPECT_EQ(tm->right.str(), "ab");
  // The image-side barriers are mu(ab) = abba at both ends.
  EXPECT_EQ(apply(mu, tm->left).str(), "abba");

  const auto& fib = fibonacci_morphism();
  const auto f6 = barrier_certificate(fib, fibonacci_word(6));
  ASSERT_TRUE(f6.has_value());
  EXPECT_EQ(f6->left.str(), "a");
  EXPECT_EQ(f6->right.str(), "a");

  const auto& mw = named_morphism("mephisto-waltz");
  const auto single = barrier_certificate(mw, src(mw, "b"));
  ASSERT_TRUE(single.has_value());
  EXPECT_EQ(single->left.str(), "b");
  EXPECT_EQ(single->right.str(), "b");

  EXPECT_FALSE(barrier_certificate(fib, src(fib, "bb")).has_value());
}

TEST(Barrier, SoundOnRandomWords) {
  std::mt19937_64 rng(17);
  for (const char* name : {"fibonacci", "thue-morse", "mephisto-waltz"}) {
    const auto& phi = named_morphism(name);
    for (int k = 0; k < 300; ++k) {
      const Word u = src(phi, oracle::random_word(rng, 2, 1, 20));
      if (barrier_certificate(phi, u, 4)) {
        EXPECT_TRUE(is_interference_free_on(phi, u).interference_free) << name << " " << u.str();
      }
    }
  }
}
