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

#include "morphlab/interference.hpp"

#include <algorithm>
#include <limits>

#include "morphlab/error.hpp"

namespace morphlab {

Word InterferedFactorization::y(const Morphism& phi) const {
  return apply(phi, Word(phi.source(), y_images));
}

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

// How prefix w[1..j] was first reached with its smallest x.
struct Step {
  enum Kind : std::uint8_t { kNone, kOrigin, kSeed, kImage } kind = kNone;
  std::size_t from = 0;
  Symbol symbol = 0;
};

std::optional<Symbol> donor_with_suffix(const Morphism& phi, std::span<const Symbol> x) {
  for (std::size_t c = 0; c < phi.images().size(); ++c) {
    const auto img = phi.images()[c].symbols();
    if (x.size() < img.size() && is_suffix(x, img)) return static_cast<Symbol>(c);
  }
  return std::nullopt;
}

std::optional<Symbol> donor_with_prefix(const Morphism& phi, std::span<const Symbol> z) {
  for (std::size_t c = 0; c < phi.images().size(); ++c) {
    const auto img = phi.images()[c].symbols();
    if (z.size() < img.size() && is_prefix(z, img)) return static_cast<Symbol>(c);
  }
  return std::nullopt;
}

InterferedFactorization to_factorization(const Morphism& phi, const Word& w,
                                         const PrefixDecomposition& d) {
  InterferedFactorization f;
  f.x = w.substr(0, d.x_length);
  f.y_images = d.y_images;
  f.z = w.substr(w.size() - d.z_length);
  if (!f.x.empty()) f.donor_x = donor_with_suffix(phi, f.x.symbols());
  if (!f.z.empty()) f.donor_z = donor_with_prefix(phi, f.z.symbols());
  return f;
}

}  // namespace

namespace {

FactorizableResult forward_pass(const Morphism& phi, const ScanResult& scan) {
  const std::size_t n = scan.length;

  // min_x[j]: smallest |x| over decompositions w[1..j] = x . y.
  std::vector<std::size_t> min_x(n + 1, kUnreached);
  std::vector<Step> how(n + 1);
  min_x[0] = 0;
  how[0].kind = Step::kOrigin;
  for (std::size_t i : scan.proper_suffix_prefixes) {
    if (i < min_x[i]) {
      min_x[i] = i;
      how[i].kind = Step::kSeed;
    }
  }
  // S is sparse and sorted by position, so one sweep visits each S_i after
  // every transition into i - 1 has been applied.
  for (const auto& [pos, symbols] : scan.starts) {
    const std::size_t from = pos - 1;
    if (min_x[from] == kUnreached) continue;
    for (Symbol c : symbols) {
      const std::size_t to = from + phi.image(c).size();
      if (min_x[from] < min_x[to]) {
        min_x[to] = min_x[from];
        how[to] = Step{Step::kImage, from, c};
      }
    }
  }

  FactorizableResult result;
  result.reachable.resize(n + 1);
  for (std::size_t j = 0; j <= n; ++j) result.reachable[j] = min_x[j] != kUnreached;

  std::size_t best_j = 0;
  for (std::size_t j : scan.proper_prefix_suffixes) {
    if (min_x[j - 1] == kUnreached) continue;
    if (best_j == 0 || min_x[j - 1] < min_x[best_j - 1]) best_j = j;
  }
  if (best_j == 0) return result;

  PrefixDecomposition d;
  d.z_length = n - best_j + 1;
  std::size_t p = best_j - 1;
  while (how[p].kind == Step::kImage) {
    d.y_images.push_back(how[p].symbol);
    p = how[p].from;
  }
  d.x_length = how[p].kind == Step::kSeed ? p : 0;
  std::reverse(d.y_images.begin(), d.y_images.end());

  result.factorizable = true;
  result.witness = std::move(d);
  return result;
}


// factorizable(phi^R, w^R) read on w itself, from the same scan:
// w = x . y . z with x a nonempty proper image suffix, y in Img*, z a
// possibly empty proper image prefix.  Mirrors the forward pass, including
// its tie-breaking, so witnesses match the reversed-word computation.
std::optional<PrefixDecomposition> mirrored_pass(const Morphism& phi, const ScanResult& scan) {
  const std::size_t n = scan.length;
  // min_z[k]: smallest |z| over w[k..n] = y . z; index n + 1 is the empty suffix.
  std::vector<std::size_t> min_z(n + 2, kUnreached);
  std::vector<Step> how(n + 2);
  min_z[n + 1] = 0;
  how[n + 1].kind = Step::kOrigin;
  for (std::size_t k : scan.proper_prefix_suffixes) {
    if (n - k + 1 < min_z[k]) {
      min_z[k] = n - k + 1;
      how[k].kind = Step::kSeed;
    }
  }
  for (auto it = scan.starts.rbegin(); it != scan.starts.rend(); ++it) {
    const std::size_t k = it->first;
    for (Symbol c : it->second) {
      const std::size_t to = k + phi.image(c).size();
      if (min_z[to] < min_z[k]) {
        min_z[k] = min_z[to];
        how[k] = Step{Step::kImage, to, c};
      }
    }
  }
  std::size_t best_i = 0;
  for (std::size_t i : scan.proper_suffix_prefixes) {
    if (min_z[i + 1] == kUnreached) continue;
    if (best_i == 0 || min_z[i + 1] <= min_z[best_i + 1]) best_i = i;
  }
  if (best_i == 0) return std::nullopt;

  PrefixDecomposition d;
  d.x_length = best_i;
  std::size_t p = best_i + 1;
  while (how[p].kind == Step::kImage) {
    d.y_images.push_back(how[p].symbol);
    p = how[p].from;
  }
  d.z_length = how[p].kind == Step::kSeed ? n - p + 1 : 0;
  return d;
}

}  // namespace

FactorizableResult factorizable(const ImageScanner& scanner, const Word& w) {
  const Morphism& phi = scanner.morphism();
  if (!phi.is_non_erasing()) {
    throw Error(ErrorCode::kErasingImage, "factorizable requires a non-erasing morphism");
  }
  if (w.empty()) throw Error(ErrorCode::kEmptyWord, "factorizable on the empty word");
  return forward_pass(phi, scanner.scan(w));
}

FactorizableResult factorizable(const Morphism& phi, const Word& w) {
  return factorizable(ImageScanner(phi), w);
}

std::optional<InnerImageFactor> find_inner_image_factor(const Morphism& phi, const Word& w) {
  if (w.empty()) throw Error(ErrorCode::kEmptyWord, "inner image factor test on the empty word");
  if (!same_alphabet(w.alphabet(), phi.target())) {
    throw Error(ErrorCode::kAlphabetMismatch, "word is not over the morphism's target alphabet");
  }
  for (std::size_t c = 0; c < phi.images().size(); ++c) {
    const auto img = phi.images()[c].symbols();
    if (img.size() < w.size() + 2) continue;
    for (std::size_t s : find_all(w.symbols(), img)) {
      if (s >= 1 && s + w.size() <= img.size() - 1) {
        return InnerImageFactor{static_cast<Symbol>(c), s + 1};
      }
    }
  }
  return std::nullopt;
}

InterferenceChecker::InterferenceChecker(const Morphism& phi, IfOptions options)
    : forward_(phi) {
  if (!phi.is_injective()) {
    if (!options.allow_non_injective) {
      throw Error(ErrorCode::kNotInjective,
                  "morphism " + phi.to_string() + " is not injective; interference-freeness is undefined");
    }
    precondition_violated_ = true;
  }
}

IfDecision InterferenceChecker::check(const Word& u) const {
  if (u.empty()) {
    throw Error(ErrorCode::kEmptyWord, "interference-freeness is only defined on nonempty words");
  }
  return check_image(apply(morphism(), u));
}

IfDecision InterferenceChecker::check_image(const Word& w) const {
  IfDecision decision;
  decision.precondition_violated = precondition_violated_;
  const Morphism& phi = morphism();
  if (w.empty()) throw Error(ErrorCode::kEmptyWord, "interference check on the empty word");

  const ScanResult scan = forward_.scan(w);
  auto forward = forward_pass(phi, scan);
  if (forward.factorizable) {
    decision.witness = to_factorization(phi, w, *forward.witness);
    return decision;
  }
  if (auto mirrored = mirrored_pass(phi, scan)) {
    decision.witness = to_factorization(phi, w, *mirrored);
    return decision;
  }
  if (auto inner = find_inner_image_factor(phi, w)) {
    decision.witness = *inner;
    return decision;
  }
  decision.interference_free = true;
  return decision;
}

IfDecision is_interference_free_on(const Morphism& phi, const Word& u, IfOptions options) {
  return InterferenceChecker(phi, options).check(u);
}

IfDecision is_interference_free_on(const Morphism& phi, std::span<const Word> language,
                                   IfOptions options) {
  InterferenceChecker checker(phi, options);
  IfDecision last;
  last.interference_free = true;
  for (const auto& u : language) {
    last = checker.check(u);
    if (!last.interference_free) return last;
  }
  return last;
}

StrongIfDecision is_strongly_interference_free(const Morphism& phi, IfOptions options) {
  InterferenceChecker checker(phi, options);
  StrongIfDecision result;
  for (std::size_t c = 0; c < phi.source()->size(); ++c) {
    auto d = checker.check(Word(phi.source(), {static_cast<Symbol>(c)}));
    result.precondition_violated = d.precondition_violated;
    if (!d.interference_free) {
      result.failing_symbol = static_cast<Symbol>(c);
      result.witness = std::move(d.witness);
      return result;
    }
  }
  result.strongly_interference_free = true;
  return result;
}

std::optional<BarrierCertificate> barrier_certificate(const Morphism& phi, const Word& u,
                                                      std::size_t max_length, IfOptions options) {
  if (u.empty()) throw Error(ErrorCode::kEmptyWord, "barrier certificate for the empty word");
  InterferenceChecker checker(phi, options);
  const std::size_t cap = std::min(max_length, u.size());
  std::optional<Word> left;
  std::optional<Word> right;
  for (std::size_t len = 1; len <= cap && !left; ++len) {
    Word b = u.substr(0, len);
    if (checker.check(b).interference_free) left = std::move(b);
  }
  if (!left) return std::nullopt;
  for (std::size_t len = 1; len <= cap && !right; ++len) {
    Word b = u.substr(u.size() - len);
    if (checker.check(b).interference_free) right = std::move(b);
  }
  if (!right) return std::nullopt;
  return BarrierCertificate{std::move(*left), std::move(*right)};
}

bool witness_is_valid(const Morphism& phi, const Word& w, const InterferenceWitness& witness) {
  if (const auto* inner = std::get_if<InnerImageFactor>(&witness)) {
    if (inner->host >= phi.images().size()) return false;
    const auto img = phi.image(inner->host).symbols();
    const std::size_t start = inner->offset - 1;
    if (inner->offset < 2 || img.size() < 2 || start + w.size() > img.size() - 1) return false;
    return std::equal(w.data().begin(), w.data().end(), img.begin() + static_cast<std::ptrdiff_t>(start));
  }
  const auto& f = std::get<InterferedFactorization>(witness);
  if (f.x.empty() && f.z.empty()) return false;
  for (Symbol c : f.y_images) {
    if (c >= phi.images().size()) return false;
  }
  if (!(f.x + f.y(phi) + f.z == w)) return false;
  if (!f.x.empty()) {
    if (!f.donor_x) return false;
    const auto img = phi.image(*f.donor_x).symbols();
    if (f.x.size() >= img.size() || !is_suffix(f.x.symbols(), img)) return false;
  }
  if (!f.z.empty()) {
    if (!f.donor_z) return false;
    const auto img = phi.image(*f.donor_z).symbols();
    if (f.z.size() >= img.size() || !is_prefix(f.z.symbols(), img)) return false;
  }
  return true;
}

}  // namespace morphlab
