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

#ifndef MORPHLAB_CLASSIC_WORDS_HPP
#define MORPHLAB_CLASSIC_WORDS_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "morphlab/morphism.hpp"
#include "morphlab/report.hpp"
#include "morphlab/words.hpp"

namespace morphlab {

inline constexpr std::size_t kFibonacciOrderCap = 30;
inline constexpr std::size_t kThueMorseOrderCap = 22;

struct NamedMorphism {
  std::string name;
  Morphism morphism;
};

/// fibonacci, thue-morse, variant-thue-morse, mephisto-waltz,
/// thue-morse-morse, last-nonzero-digit, in that order.
const std::vector<NamedMorphism>& named_morphisms();
/// Throws ErrorCode::kInvalidArgument for unknown names.
const Morphism& named_morphism(std::string_view name);

const Morphism& fibonacci_morphism();
const Morphism& thue_morse_morphism();

/// f_i = |F_i| (f_1 = f_2 = 1).
std::size_t fibonacci_number(std::size_t i);

/// F_1 = b, F_2 = a, F_i = F_{i-1} F_{i-2}.
Word fibonacci_word(std::size_t i, std::size_t max_order = kFibonacciOrderCap);
/// tm_1 = a, tm_i = tm_{i-1} flip(tm_{i-1}).
Word thue_morse_word(std::size_t i, std::size_t max_order = kThueMorseOrderCap);

/// F_i without its last two symbols; i >= 3.
Word fibonacci_G(std::size_t i);
/// ba for even i, ab for odd i.
Word fibonacci_delta(std::size_t i);

/// {a w a, a w b, b w a, b w b} on a binary alphabet.
std::vector<Word> extensions(const Word& w);

/// For 3 <= i <= i_max: no aaa and no bb in F_i, F_i = G_i Delta_i, and for
/// i >= 7 the occurrences of G_{i-1} in F_i are exactly {1, f_{i-2} + 1}.
VerificationReport structural_checks(std::size_t i_max);

/// Interference-freeness parity: phi_Fib is not IF on F_i for odd i >= 5
/// and IF on F_i for even i >= 4; mu is IF on tm_i for i >= 4; phi_Fib is
/// IF on F_i^< for odd i >= 5 with phi(F_i^<) = F_{i+1}^<.
VerificationReport verify_if_parity(std::size_t fib_max, std::size_t tm_max);

}  // namespace morphlab

#endif  // MORPHLAB_CLASSIC_WORDS_HPP
