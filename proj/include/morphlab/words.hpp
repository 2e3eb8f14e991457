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
 * @file    words.hpp
 * @brief   Alphabets, words and the elementary occurrence/rotation operations
 *          every other module is written against.
 *
 * Words store dense symbol indices into a shared, immutable Alphabet.  Element
 * access through `operator[]` is 0-based like any container, but every
 * *position* that leaves the library (occurrence sets, intervals, offsets) is
 * 1-based.
 */

#ifndef MORPHLAB_WORDS_HPP
#define MORPHLAB_WORDS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace morphlab {

using Symbol = std::uint8_t;

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// Ordered set of printable symbols with dense indices 0..size()-1.
class Alphabet {
 public:
  /// Symbols keep the order given.  Throws on duplicates, whitespace, an
  /// empty set, or one of the reserved format characters `- > ; . @ =`.
  static AlphabetPtr create(std::string_view symbols);
  /// Sorted distinct symbols of `text`.
  static AlphabetPtr of(std::string_view text);
  static AlphabetPtr binary();

  std::size_t size() const noexcept { return symbols_.size(); }
  char symbol(Symbol index) const { return symbols_.at(index); }
  std::optional<Symbol> index_of(char c) const noexcept;
  const std::string& symbols() const noexcept { return symbols_; }

  bool operator==(const Alphabet& other) const noexcept {
    return symbols_ == other.symbols_;
  }

  static bool is_reserved(char c) noexcept;

 private:
  explicit Alphabet(std::string symbols);

  std::string symbols_;
  std::array<std::int16_t, 256> index_{};
};

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) noexcept;

class Word {
 public:
  Word() = default;
  explicit Word(AlphabetPtr alphabet, std::vector<Symbol> data = {});

  /// Maps each character of `text` through `alphabet`; unknown characters
  /// raise ErrorCode::kAlphabetMismatch.
  static Word parse(AlphabetPtr alphabet, std::string_view text);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  std::span<const Symbol> symbols() const noexcept { return data_; }
  const std::vector<Symbol>& data() const noexcept { return data_; }

  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }
  Symbol operator[](std::size_t i) const noexcept { return data_[i]; }

  /// 0-based substring, `len` clipped to the end of the word.
  Word substr(std::size_t pos, std::size_t len = std::string::npos) const;
  /// 1-based inclusive slice w[i..j]; j = i - 1 yields the empty word.
  Word slice(std::size_t i, std::size_t j) const;

  std::string str() const;

  Word& operator+=(const Word& rhs);
  friend Word operator+(Word lhs, const Word& rhs) {
    lhs += rhs;
    return lhs;
  }

  bool operator==(const Word& other) const noexcept;
  /// Lexicographic by symbol index; alphabets are assumed compatible.
  bool operator<(const Word& other) const noexcept { return data_ < other.data_; }

 private:
  AlphabetPtr alphabet_;
  std::vector<Symbol> data_;
};

/// Starting positions (1-based, strictly increasing) of a pattern in a text.
struct OccurrenceSet {
  std::size_t pattern_length = 0;
  std::vector<std::size_t> positions;

  std::size_t count() const noexcept { return positions.size(); }
  /// Comma-separated positions, e.g. "1,4"; empty set serializes as "".
  std::string to_string() const;

  bool operator==(const OccurrenceSet&) const = default;
};

/// All starting positions of `u` in `w` via a linear-time prefix-function
/// matcher.  The empty pattern occurs at 1..|w|+1.
OccurrenceSet occurrences(const Word& u, const Word& w);
std::size_t occ_count(const Word& u, const Word& w);

/// Rotations w[i..|w|] w[1..i-1] for i = 1..|w|, with multiplicity.
std::vector<Word> rotations(const Word& w);
/// The single rotation starting at 0-based offset `shift`.
Word rotation(const Word& w, std::size_t shift);

/// Letterwise complement on a binary alphabet.
Word flip(const Word& w);
Word reverse(const Word& w);
/// w[1..|w|-1]; requires |w| >= 2.
Word longest_proper_prefix(const Word& w);

bool is_prefix(std::span<const Symbol> prefix, std::span<const Symbol> w) noexcept;
bool is_suffix(std::span<const Symbol> suffix, std::span<const Symbol> w) noexcept;

/// Prefix-function (failure table) of a pattern; shared by matchers that
/// need single-pattern search over raw symbol spans.
std::vector<std::size_t> prefix_function(std::span<const Symbol> pattern);
/// 0-based starts of `pattern` in `text`; pattern must be nonempty.
std::vector<std::size_t> find_all(std::span<const Symbol> pattern,
                                  std::span<const Symbol> text);

}  // namespace morphlab

#endif  // MORPHLAB_WORDS_HPP
