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

#include "morphlab/words.hpp"

#include <algorithm>
#include <cctype>

#include "morphlab/error.hpp"

namespace morphlab {

bool Alphabet::is_reserved(char c) noexcept {
  switch (c) {
    case '-':
    case '>':
    case ';':
    case '.':
    case '@':
    case '=':
    case ',':
      return true;
    default:
      return false;
  }
}

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
  index_.fill(-1);
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    index_[static_cast<unsigned char>(symbols_[i])] = static_cast<std::int16_t>(i);
  }
}

AlphabetPtr Alphabet::create(std::string_view symbols) {
  if (symbols.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "alphabet must contain at least one symbol");
  }
  std::array<bool, 256> seen{};
  for (char c : symbols) {
    auto uc = static_cast<unsigned char>(c);
    if (!std::isgraph(uc) || is_reserved(c)) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("symbol not allowed in an alphabet: '") + c + "'");
    }
    if (seen[uc]) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("duplicate alphabet symbol '") + c + "'");
    }
    seen[uc] = true;
  }
  return AlphabetPtr(new Alphabet(std::string(symbols)));
}

AlphabetPtr Alphabet::of(std::string_view text) {
  std::string s(text);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return create(s);
}

AlphabetPtr Alphabet::binary() {
  static const AlphabetPtr ab = create("ab");
  return ab;
}

std::optional<Symbol> Alphabet::index_of(char c) const noexcept {
  auto i = index_[static_cast<unsigned char>(c)];
  if (i < 0) return std::nullopt;
  return static_cast<Symbol>(i);
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

Word::Word(AlphabetPtr alphabet, std::vector<Symbol> data)
    : alphabet_(std::move(alphabet)), data_(std::move(data)) {
  if (!alphabet_) {
    throw Error(ErrorCode::kInvalidArgument, "word requires an alphabet");
  }
  for (Symbol s : data_) {
    if (s >= alphabet_->size()) {
      throw Error(ErrorCode::kAlphabetMismatch, "symbol index outside alphabet");
    }
  }
}

Word Word::parse(AlphabetPtr alphabet, std::string_view text) {
  std::vector<Symbol> data;
  data.reserve(text.size());
  for (char c : text) {
    auto idx = alphabet->index_of(c);
    if (!idx) {
      throw Error(ErrorCode::kAlphabetMismatch,
                  std::string("symbol '") + c + "' is not in alphabet {" +
                      alphabet->symbols() + "}");
    }
    data.push_back(*idx);
  }
  Word w;
  w.alphabet_ = std::move(alphabet);
  w.data_ = std::move(data);
  return w;
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  if (pos > data_.size()) {
    throw Error(ErrorCode::kOutOfRange, "substring start beyond end of word");
  }
  len = std::min(len, data_.size() - pos);
  Word w;
  w.alphabet_ = alphabet_;
  w.data_.assign(data_.begin() + static_cast<std::ptrdiff_t>(pos),
                 data_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return w;
}

Word Word::slice(std::size_t i, std::size_t j) const {
  if (i < 1 || j + 1 < i || j > data_.size()) {
    throw Error(ErrorCode::kOutOfRange,
                "slice [" + std::to_string(i) + "," + std::to_string(j) +
                    "] outside word of length " + std::to_string(data_.size()));
  }
  return substr(i - 1, j + 1 - i);
}

std::string Word::str() const {
  std::string s;
  s.reserve(data_.size());
  for (Symbol c : data_) s.push_back(alphabet_->symbol(c));
  return s;
}

Word& Word::operator+=(const Word& rhs) {
  if (!same_alphabet(alphabet_, rhs.alphabet_)) {
    throw Error(ErrorCode::kAlphabetMismatch, "concatenation of words over different alphabets");
  }
  data_.insert(data_.end(), rhs.data_.begin(), rhs.data_.end());
  return *this;
}

bool Word::operator==(const Word& other) const noexcept {
  return data_ == other.data_ && same_alphabet(alphabet_, other.alphabet_);
}

std::string OccurrenceSet::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if (k) s.push_back(',');
    s += std::to_string(positions[k]);
  }
  return s;
}

std::vector<std::size_t> prefix_function(std::span<const Symbol> pattern) {
  std::vector<std::size_t> pi(pattern.size(), 0);
  for (std::size_t i = 1; i < pattern.size(); ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && pattern[i] != pattern[k]) k = pi[k - 1];
    if (pattern[i] == pattern[k]) ++k;
    pi[i] = k;
  }
  return pi;
}

std::vector<std::size_t> find_all(std::span<const Symbol> pattern,
                                  std::span<const Symbol> text) {
  std::vector<std::size_t> starts;
  const std::size_t m = pattern.size();
  if (m == 0 || m > text.size()) return starts;
  const auto pi = prefix_function(pattern);
  std::size_t k = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    while (k > 0 && text[i] != pattern[k]) k = pi[k - 1];
    if (text[i] == pattern[k]) ++k;
    if (k == m) {
      starts.push_back(i + 1 - m);
      k = pi[k - 1];
    }
  }
  return starts;
}

namespace {

void require_same(const Word& u, const Word& w) {
  if (!same_alphabet(u.alphabet(), w.alphabet())) {
    throw Error(ErrorCode::kAlphabetMismatch, "pattern and text use different alphabets");
  }
}

void require_binary(const Word& w, const char* op) {
  if (w.alphabet()->size() != 2) {
    throw Error(ErrorCode::kInvalidArgument, std::string(op) + " requires a binary alphabet");
  }
}

}  // namespace

OccurrenceSet occurrences(const Word& u, const Word& w) {
  require_same(u, w);
  OccurrenceSet occ;
  occ.pattern_length = u.size();
  if (u.empty()) {
    occ.positions.resize(w.size() + 1);
    for (std::size_t i = 0; i <= w.size(); ++i) occ.positions[i] = i + 1;
    return occ;
  }
  occ.positions = find_all(u.symbols(), w.symbols());
  for (auto& p : occ.positions) ++p;
  return occ;
}

std::size_t occ_count(const Word& u, const Word& w) {
  return occurrences(u, w).count();
}

Word rotation(const Word& w, std::size_t shift) {
  if (w.empty()) throw Error(ErrorCode::kEmptyWord, "rotation of the empty word");
  shift %= w.size();
  std::vector<Symbol> data;
  data.reserve(w.size());
  data.insert(data.end(), w.data().begin() + static_cast<std::ptrdiff_t>(shift), w.data().end());
  data.insert(data.end(), w.data().begin(), w.data().begin() + static_cast<std::ptrdiff_t>(shift));
  return Word(w.alphabet(), std::move(data));
}

std::vector<Word> rotations(const Word& w) {
  if (w.empty()) throw Error(ErrorCode::kEmptyWord, "rotations of the empty word");
  std::vector<Word> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(rotation(w, i));
  return out;
}

Word flip(const Word& w) {
  require_binary(w, "flip");
  std::vector<Symbol> data(w.data());
  for (auto& c : data) c = static_cast<Symbol>(1 - c);
  return Word(w.alphabet(), std::move(data));
}

Word reverse(const Word& w) {
  std::vector<Symbol> data(w.data().rbegin(), w.data().rend());
  return Word(w.alphabet(), std::move(data));
}

Word longest_proper_prefix(const Word& w) {
  if (w.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "longest proper prefix needs a word of length >= 2");
  }
  return w.substr(0, w.size() - 1);
}

bool is_prefix(std::span<const Symbol> prefix, std::span<const Symbol> w) noexcept {
  return prefix.size() <= w.size() && std::equal(prefix.begin(), prefix.end(), w.begin());
}

bool is_suffix(std::span<const Symbol> suffix, std::span<const Symbol> w) noexcept {
  return suffix.size() <= w.size() &&
         std::equal(suffix.begin(), suffix.end(), w.end() - static_cast<std::ptrdiff_t>(suffix.size()));
}

}  // namespace morphlab
