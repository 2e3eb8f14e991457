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

#include "morphlab/factorization.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <string>

#include "morphlab/error.hpp"

namespace morphlab {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

bool image_at(const Morphism& phi, Symbol c, std::span<const Symbol> w, std::size_t pos) {
  const auto img = phi.image(c).symbols();
  return pos + img.size() <= w.size() &&
         std::equal(img.begin(), img.end(), w.begin() + static_cast<std::ptrdiff_t>(pos));
}

void check_length(const Word& w, const OracleBudget& budget) {
  if (w.size() > budget.max_word_length) {
    throw Error(ErrorCode::kBudgetExceeded,
                "budget exceeded: word length " + std::to_string(w.size()) + " > " +
                    std::to_string(budget.max_word_length));
  }
}

[[noreturn]] void count_exceeded(const OracleBudget& budget) {
  throw Error(ErrorCode::kBudgetExceeded,
              "budget exceeded: more than " + std::to_string(budget.max_factorizations) + " factorizations");
}

// ways[i]: number of image factorizations of w[i..n); an empty image is
// rejected by the callers before this is reached.
std::vector<std::uint64_t> suffix_counts(const Morphism& phi, std::span<const Symbol> w) {
  std::vector<std::uint64_t> ways(w.size() + 1, 0);
  ways[w.size()] = 1;
  for (std::size_t i = w.size(); i-- > 0;) {
    for (std::size_t c = 0; c < phi.images().size(); ++c) {
      if (phi.images()[c].empty()) continue;
      if (image_at(phi, static_cast<Symbol>(c), w, i)) {
        ways[i] = saturating_add(ways[i], ways[i + phi.images()[c].size()]);
      }
    }
  }
  return ways;
}

class FactorizationWalker {
 public:
  FactorizationWalker(const Morphism& phi, std::span<const Symbol> w, const OracleBudget& budget)
      : phi_(phi), w_(w), budget_(budget), ways_(suffix_counts(phi, w)) {}

  std::vector<std::vector<Symbol>> all() {
    if (ways_[0] > budget_.max_factorizations) count_exceeded(budget_);
    std::vector<Symbol> current;
    walk(0, current);
    return std::move(out_);
  }

 private:
  void walk(std::size_t pos, std::vector<Symbol>& current) {
    if (pos == w_.size()) {
      out_.push_back(current);
      return;
    }
    for (std::size_t c = 0; c < phi_.images().size(); ++c) {
      const auto len = phi_.images()[c].size();
      if (len == 0 || !image_at(phi_, static_cast<Symbol>(c), w_, pos) || ways_[pos + len] == 0) continue;
      current.push_back(static_cast<Symbol>(c));
      walk(pos + len, current);
      current.pop_back();
    }
  }

  const Morphism& phi_;
  std::span<const Symbol> w_;
  const OracleBudget& budget_;
  std::vector<std::uint64_t> ways_;
  std::vector<std::vector<Symbol>> out_;
};

void require_non_erasing(const Morphism& phi) {
  if (!phi.is_non_erasing()) {
    throw Error(ErrorCode::kErasingImage, "factorization oracles require a non-erasing morphism");
  }
}

void require_target(const Morphism& phi, const Word& w) {
  if (!same_alphabet(w.alphabet(), phi.target())) {
    throw Error(ErrorCode::kAlphabetMismatch, "word is not over the morphism's target alphabet");
  }
}

std::optional<Symbol> proper_suffix_donor(const Morphism& phi, std::span<const Symbol> x) {
  for (std::size_t c = 0; c < phi.images().size(); ++c) {
    const auto img = phi.images()[c].symbols();
    if (x.size() >= img.size()) continue;
    if (std::equal(x.begin(), x.end(), img.end() - static_cast<std::ptrdiff_t>(x.size()))) {
      return static_cast<Symbol>(c);
    }
  }
  return std::nullopt;
}

std::optional<Symbol> proper_prefix_donor(const Morphism& phi, std::span<const Symbol> z) {
  for (std::size_t c = 0; c < phi.images().size(); ++c) {
    const auto img = phi.images()[c].symbols();
    if (z.size() >= img.size()) continue;
    if (std::equal(z.begin(), z.end(), img.begin())) return static_cast<Symbol>(c);
  }
  return std::nullopt;
}

}  // namespace

OracleBudget OracleBudget::parse(std::string_view text) {
  OracleBudget budget;
  auto read = [&](std::string_view part, auto& out) {
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), out);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty() || out == 0) {
      throw Error(ErrorCode::kParse, "malformed budget '" + std::string(text) + "'");
    }
  };
  auto comma = text.find(',');
  read(text.substr(0, comma), budget.max_word_length);
  if (comma != std::string_view::npos) read(text.substr(comma + 1), budget.max_factorizations);
  return budget;
}

std::uint64_t count_image_factorizations(const Morphism& phi, std::span<const Symbol> w) {
  require_non_erasing(phi);
  return suffix_counts(phi, w)[0];
}

std::vector<std::vector<Symbol>> enumerate_image_factorizations(const Morphism& phi, const Word& w,
                                                                const OracleBudget& budget) {
  require_non_erasing(phi);
  require_target(phi, w);
  check_length(w, budget);
  return FactorizationWalker(phi, w.symbols(), budget).all();
}

std::vector<InterferedFactorization> enumerate_interfered_factorizations(
    const Morphism& phi, const Word& w, const OracleBudget& budget) {
  require_non_erasing(phi);
  require_target(phi, w);
  check_length(w, budget);
  if (w.empty()) throw Error(ErrorCode::kEmptyWord, "interfered factorizations of the empty word");
  std::vector<InterferedFactorization> out;
  const auto s = w.symbols();
  const std::size_t n = w.size();
  for (std::size_t xl = 0; xl <= n; ++xl) {
    std::optional<Symbol> dx;
    if (xl > 0) {
      dx = proper_suffix_donor(phi, s.first(xl));
      if (!dx) continue;
    }
    for (std::size_t zl = 0; xl + zl <= n; ++zl) {
      if (xl + zl == 0) continue;
      std::optional<Symbol> dz;
      if (zl > 0) {
        dz = proper_prefix_donor(phi, s.last(zl));
        if (!dz) continue;
      }
      const auto middle = s.subspan(xl, n - xl - zl);
      for (auto& y : FactorizationWalker(phi, middle, budget).all()) {
        if (out.size() >= budget.max_factorizations) count_exceeded(budget);
        InterferedFactorization f;
        f.x = w.substr(0, xl);
        f.y_images = std::move(y);
        f.z = w.substr(n - zl);
        f.donor_x = dx;
        f.donor_z = dz;
        out.push_back(std::move(f));
      }
    }
  }
  return out;
}

std::vector<CircularFactorization> enumerate_circular_factorizations(const Morphism& phi,
                                                                     const Word& w,
                                                                     const OracleBudget& budget) {
  require_non_erasing(phi);
  require_target(phi, w);
  check_length(w, budget);
  if (w.empty()) throw Error(ErrorCode::kEmptyWord, "circular factorizations of the empty word");
  std::vector<CircularFactorization> out;
  const auto s = w.symbols();
  const std::size_t n = w.size();
  for (std::size_t c = 0; c < phi.images().size(); ++c) {
    const auto img = phi.images()[c].symbols();
    if (img.size() > n) continue;
    // p = img[0..k), q = img[k..); p is nonempty.
    for (std::size_t k = 1; k <= img.size(); ++k) {
      const auto p = img.first(k);
      const auto q = img.subspan(k);
      if (!std::equal(q.begin(), q.end(), s.begin())) continue;
      if (!std::equal(p.begin(), p.end(), s.end() - static_cast<std::ptrdiff_t>(k))) continue;
      const auto middle = s.subspan(q.size(), n - q.size() - p.size());
      for (auto& r : FactorizationWalker(phi, middle, budget).all()) {
        if (out.size() >= budget.max_factorizations) count_exceeded(budget);
        CircularFactorization f;
        f.q = w.substr(0, q.size());
        f.r_images = std::move(r);
        f.p = w.substr(n - k);
        f.split_symbol = static_cast<Symbol>(c);
        out.push_back(std::move(f));
      }
    }
  }
  return out;
}

std::uint64_t count_circular_factorizations(const Morphism& phi, const Word& w) {
  require_non_erasing(phi);
  require_target(phi, w);
  if (w.empty()) throw Error(ErrorCode::kEmptyWord, "circular factorizations of the empty word");
  const auto s = w.symbols();
  const std::size_t n = w.size();
  std::uint64_t total = 0;
  // One forward count table per distinct |q|; |q| < max image length.
  std::vector<std::vector<std::uint64_t>> by_offset(phi.max_image_length());
  auto prefix_counts = [&](std::size_t start) -> const std::vector<std::uint64_t>& {
    auto& ways = by_offset[start];
    if (!ways.empty()) return ways;
    // ways[e]: factorizations of s[start..e).
    ways.assign(n + 1, 0);
    ways[start] = 1;
    for (std::size_t e = start; e < n; ++e) {
      if (ways[e] == 0) continue;
      for (std::size_t c = 0; c < phi.images().size(); ++c) {
        if (image_at(phi, static_cast<Symbol>(c), s, e)) {
          auto& slot = ways[e + phi.images()[c].size()];
          slot = saturating_add(slot, ways[e]);
        }
      }
    }
    return ways;
  };
  for (std::size_t c = 0; c < phi.images().size(); ++c) {
    const auto img = phi.images()[c].symbols();
    if (img.size() > n) continue;
    for (std::size_t k = 1; k <= img.size(); ++k) {
      const auto p = img.first(k);
      const auto q = img.subspan(k);
      if (!std::equal(q.begin(), q.end(), s.begin())) continue;
      if (!std::equal(p.begin(), p.end(), s.end() - static_cast<std::ptrdiff_t>(k))) continue;
      total = saturating_add(total, prefix_counts(q.size())[n - k]);
    }
  }
  return total;
}

bool brute_force_interference_free(const Morphism& phi, const Word& u) {
  if (u.empty()) throw Error(ErrorCode::kEmptyWord, "interference-freeness on the empty word");
  const Word w = apply(phi, u);
  const auto s = w.symbols();
  // Strictly interior occurrence inside some image, by direct comparison.
  for (const auto& x : phi.images()) {
    const auto img = x.symbols();
    for (std::size_t start = 1; start + s.size() + 1 <= img.size(); ++start) {
      if (std::equal(s.begin(), s.end(), img.begin() + static_cast<std::ptrdiff_t>(start))) return false;
    }
  }
  const std::size_t n = s.size();
  for (std::size_t xl = 0; xl <= n; ++xl) {
    if (xl > 0 && !proper_suffix_donor(phi, s.first(xl))) continue;
    for (std::size_t zl = 0; xl + zl <= n; ++zl) {
      if (xl + zl == 0) continue;
      if (zl > 0 && !proper_prefix_donor(phi, s.last(zl))) continue;
      if (suffix_counts(phi, s.subspan(xl, n - xl - zl))[0] > 0) return false;
    }
  }
  return true;
}

RecognizabilityDecision is_recognizable_on(const Morphism& phi, const Word& u, IfOptions options) {
  if (u.empty()) throw Error(ErrorCode::kEmptyWord, "recognizability is only defined on nonempty words");
  RecognizabilityDecision decision;
  if (!phi.is_injective()) {
    if (!options.allow_non_injective) {
      throw Error(ErrorCode::kNotInjective,
                  "morphism " + phi.to_string() + " is not injective; recognizability is undefined");
    }
    decision.precondition_violated = true;
  }
  const Word w = apply(phi, u);
  for (std::size_t shift = 0; shift < w.size(); ++shift) {
    Word r = rotation(w, shift);
    const auto count = count_circular_factorizations(phi, r);
    if (count != 1) {
      decision.rotation = std::move(r);
      decision.count = count;
      return decision;
    }
  }
  decision.recognizable = true;
  decision.count = 1;
  return decision;
}

}  // namespace morphlab
