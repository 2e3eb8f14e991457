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

#include "morphlab/classic_words.hpp"

#include "morphlab/error.hpp"
#include "morphlab/interference.hpp"

namespace morphlab {

const std::vector<NamedMorphism>& named_morphisms() {
  static const std::vector<NamedMorphism> all = {
      {"fibonacci", Morphism::parse("a->ab;b->a")},
      {"thue-morse", Morphism::parse("a->ab;b->ba")},
      {"variant-thue-morse", Morphism::parse("a->abc;b->ac;c->b")},
      {"mephisto-waltz", Morphism::parse("a->aab;b->bba")},
      {"thue-morse-morse", Morphism::parse("a->abb;b->baa")},
      {"last-nonzero-digit", Morphism::parse("a->aba;b->abb")},
  };
  return all;
}

const Morphism& named_morphism(std::string_view name) {
  for (const auto& nm : named_morphisms()) {
    if (nm.name == name) return nm.morphism;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown morphism name '" + std::string(name) + "'");
}

const Morphism& fibonacci_morphism() { return named_morphisms()[0].morphism; }
const Morphism& thue_morse_morphism() { return named_morphisms()[1].morphism; }

std::size_t fibonacci_number(std::size_t i) {
  if (i == 0) throw Error(ErrorCode::kOutOfRange, "Fibonacci index starts at 1");
  std::size_t prev = 1, cur = 1;
  for (std::size_t k = 2; k < i; ++k) {
    std::size_t next = prev + cur;
    prev = cur;
    cur = next;
  }
  return cur;
}

Word fibonacci_word(std::size_t i, std::size_t max_order) {
  if (i == 0 || i > max_order) {
    throw Error(ErrorCode::kOutOfRange,
                "Fibonacci order must lie in 1.." + std::to_string(max_order) + ", got " + std::to_string(i));
  }
  // Symbols: a = 0, b = 1.
  std::vector<Symbol> older{1};
  std::vector<Symbol> newer{0};
  if (i == 1) return Word(Alphabet::binary(), older);
  for (std::size_t k = 3; k <= i; ++k) {
    std::vector<Symbol> next;
    next.reserve(newer.size() + older.size());
    next.insert(next.end(), newer.begin(), newer.end());
    next.insert(next.end(), older.begin(), older.end());
    older = std::move(newer);
    newer = std::move(next);
  }
  return Word(Alphabet::binary(), std::move(newer));
}

Word thue_morse_word(std::size_t i, std::size_t max_order) {
  if (i == 0 || i > max_order) {
    throw Error(ErrorCode::kOutOfRange,
                "Thue-Morse order must lie in 1.." + std::to_string(max_order) + ", got " + std::to_string(i));
  }
  std::vector<Symbol> w{0};
  w.reserve(std::size_t{1} << (i - 1));
  for (std::size_t k = 2; k <= i; ++k) {
    const std::size_t half = w.size();
    for (std::size_t j = 0; j < half; ++j) w.push_back(static_cast<Symbol>(1 - w[j]));
  }
  return Word(Alphabet::binary(), std::move(w));
}

Word fibonacci_G(std::size_t i) {
  if (i < 3) throw Error(ErrorCode::kOutOfRange, "G_i is defined for i >= 3");
  Word f = fibonacci_word(i);
  return f.substr(0, f.size() - 2);
}

Word fibonacci_delta(std::size_t i) {
  return Word::parse(Alphabet::binary(), i % 2 == 0 ? "ba" : "ab");
}

std::vector<Word> extensions(const Word& w) {
  if (w.alphabet()->size() != 2) {
    throw Error(ErrorCode::kInvalidArgument, "extensions require a binary alphabet");
  }
  std::vector<Word> out;
  for (Symbol left : {Symbol{0}, Symbol{1}}) {
    for (Symbol right : {Symbol{0}, Symbol{1}}) {
      out.push_back(Word(w.alphabet(), {left}) + w + Word(w.alphabet(), {right}));
    }
  }
  return out;
}

VerificationReport structural_checks(std::size_t i_max) {
  if (i_max < 7) throw Error(ErrorCode::kOutOfRange, "structural checks need i_max >= 7");
  VerificationReport report;
  const auto ab = Alphabet::binary();
  const Word aaa = Word::parse(ab, "aaa");
  const Word bb = Word::parse(ab, "bb");
  for (std::size_t i = 3; i <= i_max; ++i) {
    const Word f = fibonacci_word(i);
    const std::string label = "F_" + std::to_string(i);
    const auto n_aaa = occ_count(aaa, f);
    const auto n_bb = occ_count(bb, f);
    report.add(label + " no aaa/bb", n_aaa == 0 && n_bb == 0,
               "occ(aaa)=" + std::to_string(n_aaa) + " occ(bb)=" + std::to_string(n_bb));
    report.add(label + " = G Delta", fibonacci_G(i) + fibonacci_delta(i) == f);
    if (i >= 7) {
      const auto occ = occurrences(fibonacci_G(i - 1), f);
      const std::vector<std::size_t> expected{1, fibonacci_number(i - 2) + 1};
      report.add(label + " Occ(G_" + std::to_string(i - 1) + ")", occ.positions == expected,
                 "positions=" + occ.to_string());
    }
  }
  return report;
}

VerificationReport verify_if_parity(std::size_t fib_max, std::size_t tm_max) {
  if (fib_max < 5 || tm_max < 4) throw Error(ErrorCode::kOutOfRange, "IF parity sweep needs fib_max >= 5, tm_max >= 4");
  VerificationReport report;
  const InterferenceChecker fib(fibonacci_morphism());
  const InterferenceChecker tm(thue_morse_morphism());
  for (std::size_t i = 4; i <= fib_max; ++i) {
    const bool expected = i % 2 == 0;
    const bool got = fib.check(fibonacci_word(i)).interference_free;
    report.add("fibonacci IF on F_" + std::to_string(i), got == expected,
               std::string("if=") + (got ? "true" : "false"));
  }
  for (std::size_t i = 5; i <= fib_max; i += 2) {
    const Word lpp = longest_proper_prefix(fibonacci_word(i));
    const bool got = fib.check(lpp).interference_free;
    const bool image_ok =
        i + 1 > kFibonacciOrderCap || apply(fibonacci_morphism(), lpp) == longest_proper_prefix(fibonacci_word(i + 1));
    report.add("fibonacci IF on F_" + std::to_string(i) + "^<", got && image_ok,
               std::string("if=") + (got ? "true" : "false") + " image=" + (image_ok ? "F_next^<" : "mismatch"));
  }
  for (std::size_t i = 4; i <= tm_max; ++i) {
    const bool got = tm.check(thue_morse_word(i)).interference_free;
    report.add("thue-morse IF on tm_" + std::to_string(i), got, std::string("if=") + (got ? "true" : "false"));
  }
  return report;
}

}  // namespace morphlab
