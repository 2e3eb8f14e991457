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
 * @file    interference.hpp
 * @brief   Deciding interference-freeness of a morphism on a word.
 *
 * phi(u) suffers interference when it can be cut as x . y . z with x a
 * proper suffix of an image, y a concatenation of images, z a proper prefix
 * of an image and x . z nonempty, or when it sits strictly inside a single
 * image.  The decision runs in O(m + n + occ) expected time: one
 * Aho-Corasick scan per direction feeds a reachability table over prefixes
 * of phi(u), once for phi (witnesses with z != empty) and once for the
 * reversed morphism on the reversed word (witnesses with x != empty).
 */

#ifndef MORPHLAB_INTERFERENCE_HPP
#define MORPHLAB_INTERFERENCE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "morphlab/matcher.hpp"
#include "morphlab/morphism.hpp"
#include "morphlab/words.hpp"

namespace morphlab {

struct InterferedFactorization {
  Word x;
  std::vector<Symbol> y_images;
  Word z;
  std::optional<Symbol> donor_x;  ///< set iff x is nonempty
  std::optional<Symbol> donor_z;  ///< set iff z is nonempty

  Word y(const Morphism& phi) const;
};

/// phi(u) occurs inside phi(host) at 1-based `offset`, touching neither end.
struct InnerImageFactor {
  Symbol host = 0;
  std::size_t offset = 0;
};

using InterferenceWitness = std::variant<InterferedFactorization, InnerImageFactor>;

/// w = x . y . z with |x| = x_length, y = phi(y_images), |z| = z_length.
struct PrefixDecomposition {
  std::size_t x_length = 0;
  std::vector<Symbol> y_images;
  std::size_t z_length = 0;
};

struct FactorizableResult {
  bool factorizable = false;
  std::optional<PrefixDecomposition> witness;
  /// reachable[j]: w[1..j] = x . y with x a (possibly empty) proper image
  /// suffix and y a concatenation of images.  reachable[0] is always set.
  std::vector<bool> reachable;
};

/// True iff w = x . y . z with z a *nonempty* proper image prefix.  Among
/// witnesses, returns one minimising |x|, then the end of y.
FactorizableResult factorizable(const ImageScanner& scanner, const Word& w);
FactorizableResult factorizable(const Morphism& phi, const Word& w);

std::optional<InnerImageFactor> find_inner_image_factor(const Morphism& phi, const Word& w);
inline bool is_inner_image_factor(const Morphism& phi, const Word& w) {
  return find_inner_image_factor(phi, w).has_value();
}

struct IfOptions {
  /// Run on non-injective morphisms anyway; the result is then flagged.
  bool allow_non_injective = false;
};

struct IfDecision {
  bool interference_free = false;
  std::optional<InterferenceWitness> witness;
  /// Set when the morphism is not injective and the check ran under
  /// `allow_non_injective`.
  bool precondition_violated = false;
};

/// Reusable checker: builds both automata once for many words.  One scan
/// of phi(u) feeds the forward and the mirrored factorization pass.
class InterferenceChecker {
 public:
  explicit InterferenceChecker(const Morphism& phi, IfOptions options = {});

  const Morphism& morphism() const noexcept { return forward_.morphism(); }

  /// Decision for {u}; u must be nonempty and over the source alphabet.
  IfDecision check(const Word& u) const;
  /// Same decision given w = phi(u) directly.
  IfDecision check_image(const Word& w) const;

 private:
  ImageScanner forward_;
  bool precondition_violated_ = false;
};

IfDecision is_interference_free_on(const Morphism& phi, const Word& u, IfOptions options = {});
/// First failing member decides; an empty language is vacuously free.
IfDecision is_interference_free_on(const Morphism& phi, std::span<const Word> language,
                                   IfOptions options = {});

struct StrongIfDecision {
  bool strongly_interference_free = false;
  std::optional<Symbol> failing_symbol;
  std::optional<InterferenceWitness> witness;
  bool precondition_violated = false;
};

/// Interference-free on every single source symbol, which is equivalent to
/// interference-free on all nonempty words.
StrongIfDecision is_strongly_interference_free(const Morphism& phi, IfOptions options = {});

struct BarrierCertificate {
  Word left;   ///< prefix of u
  Word right;  ///< suffix of u
};

/// Shortest interference-free prefix and suffix of u (each of length at most
/// `max_length`).  Their existence certifies u; absence proves nothing.
std::optional<BarrierCertificate> barrier_certificate(const Morphism& phi, const Word& u,
                                                      std::size_t max_length = 8,
                                                      IfOptions options = {});

/// Replays a witness against w = phi(u): reassembly and all side conditions.
bool witness_is_valid(const Morphism& phi, const Word& w, const InterferenceWitness& witness);

}  // namespace morphlab

#endif  // MORPHLAB_INTERFERENCE_HPP
