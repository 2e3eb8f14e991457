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

/**
 * @file    factorization.hpp
 * @brief   Brute-force factorization enumerators and bounded recognizability.
 *
 * Everything here works by direct symbol comparison against the images and
 * never touches the automaton or the prefix-reachability table, so it can
 * serve as ground truth for interference.hpp.  Enumerations are exponential
 * in general and are guarded by an OracleBudget; counting goes through a
 * polynomial DP instead.
 */

#ifndef MORPHLAB_FACTORIZATION_HPP
#define MORPHLAB_FACTORIZATION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "morphlab/interference.hpp"
#include "morphlab/morphism.hpp"
#include "morphlab/words.hpp"

namespace morphlab {

struct OracleBudget {
  std::size_t max_word_length = 64;
  std::uint64_t max_factorizations = 100000;

  /// "<max_word_length>[,<max_factorizations>]", e.g. "128,1000000".
  static OracleBudget parse(std::string_view text);
};

/// w = q . r . p with r = phi(r_images), p nonempty and p . q = phi(split_symbol).
struct CircularFactorization {
  Word q;
  std::vector<Symbol> r_images;
  Word p;
  Symbol split_symbol = 0;
};

/// Saturates at UINT64_MAX.
std::uint64_t count_image_factorizations(const Morphism& phi, std::span<const Symbol> w);

std::vector<std::vector<Symbol>> enumerate_image_factorizations(const Morphism& phi, const Word& w,
                                                                const OracleBudget& budget = {});

std::vector<InterferedFactorization> enumerate_interfered_factorizations(
    const Morphism& phi, const Word& w, const OracleBudget& budget = {});

std::vector<CircularFactorization> enumerate_circular_factorizations(const Morphism& phi,
                                                                     const Word& w,
                                                                     const OracleBudget& budget = {});
std::uint64_t count_circular_factorizations(const Morphism& phi, const Word& w);

/// Exhaustive interference-freeness: any interfered factorization of phi(u)
/// or any strictly interior embedding in an image.  No injectivity check.
bool brute_force_interference_free(const Morphism& phi, const Word& u);

struct RecognizabilityDecision {
  bool recognizable = false;
  /// First rotation of phi(u) (by shift) without a unique circular
  /// factorization, and its count (0 or >= 2).
  std::optional<Word> rotation;
  std::uint64_t count = 0;
  bool precondition_violated = false;
};

RecognizabilityDecision is_recognizable_on(const Morphism& phi, const Word& u, IfOptions options = {});

}  // namespace morphlab

#endif  // MORPHLAB_FACTORIZATION_HPP
