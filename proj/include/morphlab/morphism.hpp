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

#ifndef MORPHLAB_MORPHISM_HPP
#define MORPHLAB_MORPHISM_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "morphlab/words.hpp"

namespace morphlab {

/// Two distinct source words with equal images.  Canonical: the pair with
/// the smallest |u| + |v|, then lexicographically smallest (u, v), u < v.
struct NonInjectivityWitness {
  Word u;
  Word v;
};

struct InjectivityResult {
  bool injective = false;
  std::optional<NonInjectivityWitness> witness;
};

/**
 * A morphism from words over `source` to words over `target`, given by one
 * image per source symbol.  Copies share the same immutable state, including
 * the lazily computed injectivity verdict.
 *
 * Text form: `a->ab;b->a`, whitespace ignored, `.` for the empty image.
 * Parsing sorts the source symbols; the target alphabet defaults to the
 * sorted union of source and image symbols, so a morphism whose images only
 * use source symbols is an endomorphism (target == source).
 */
class Morphism {
 public:
  Morphism(AlphabetPtr source, AlphabetPtr target, std::vector<Word> images);

  static Morphism parse(std::string_view spec);

  const AlphabetPtr& source() const noexcept;
  const AlphabetPtr& target() const noexcept;
  const Word& image(Symbol c) const;
  std::span<const Word> images() const noexcept;

  /// m: sum of |phi(c)| over all source symbols.
  std::size_t total_length() const noexcept;
  std::size_t max_image_length() const noexcept;

  bool is_non_erasing() const noexcept;
  std::optional<std::size_t> uniform_length() const noexcept;
  bool is_endomorphism() const noexcept;

  /// Free-monoid injectivity (not merely distinct images).  Computed once on
  /// first use; safe to call concurrently.
  const InjectivityResult& injectivity() const;
  bool is_injective() const { return injectivity().injective; }

  std::string to_string() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

/// phi(u[1]) ... phi(u[|u|]).
Word apply(const Morphism& phi, const Word& u);
/// k-fold application; k >= 2 requires an endomorphism.
Word iterate(const Morphism& phi, const Word& u, std::size_t k);
/// The morphism c -> phi(c)^R.
Morphism reversal_morphism(const Morphism& phi);

}  // namespace morphlab

#endif  // MORPHLAB_MORPHISM_HPP
