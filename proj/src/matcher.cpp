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

#include "morphlab/matcher.hpp"

#include <algorithm>
#include <deque>

#include "morphlab/error.hpp"

namespace morphlab {

DictionaryMatcher DictionaryMatcher::build(std::span<const Pattern> patterns) {
  if (patterns.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "dictionary needs at least one pattern");
  }
  DictionaryMatcher m;
  m.nodes_.emplace_back();
  std::size_t total = 0;
  for (const auto& p : patterns) total += p.text.size();
  m.nodes_.reserve(total + 1);
  m.edges_.reserve(total);

  for (const auto& p : patterns) {
    if (p.text.empty()) {
      throw Error(ErrorCode::kErasingImage, "empty pattern (erasing image) in dictionary");
    }
    NodeId q = kRoot;
    for (Symbol c : p.text) {
      auto [it, inserted] = m.edges_.try_emplace(key(q, c), static_cast<NodeId>(m.nodes_.size()));
      if (inserted) {
        ++m.nodes_[q].children;
        Node n;
        n.depth = m.nodes_[q].depth + 1;
        m.nodes_.push_back(std::move(n));
      }
      q = it->second;
    }
    m.nodes_[q].ids.push_back(p.id);
  }

  // Breadth-first failure links over a temporary child list.
  std::vector<std::vector<std::pair<Symbol, NodeId>>> kids(m.nodes_.size());
  for (const auto& [k, to] : m.edges_) {
    kids[static_cast<NodeId>(k >> 8)].emplace_back(static_cast<Symbol>(k & 0xff), to);
  }
  std::deque<NodeId> queue;
  for (const auto& [c, to] : kids[kRoot]) {
    m.nodes_[to].failure = kRoot;
    m.nodes_[to].output = kRoot;
    queue.push_back(to);
  }
  while (!queue.empty()) {
    NodeId q = queue.front();
    queue.pop_front();
    for (const auto& [c, to] : kids[q]) {
      NodeId f = m.nodes_[q].failure;
      NodeId target = m.child(f, c);
      while (f != kRoot && target == kRoot) {
        f = m.nodes_[f].failure;
        target = m.child(f, c);
      }
      if (target == to) target = kRoot;
      m.nodes_[to].failure = target;
      m.nodes_[to].output = m.nodes_[target].ids.empty() ? m.nodes_[target].output : target;
      queue.push_back(to);
    }
  }
  return m;
}

DictionaryMatcher::NodeId DictionaryMatcher::child(NodeId q, Symbol c) const {
  auto it = edges_.find(key(q, c));
  return it == edges_.end() ? kRoot : it->second;
}

DictionaryMatcher::NodeId DictionaryMatcher::step(NodeId q, Symbol c) const {
  for (;;) {
    auto it = edges_.find(key(q, c));
    if (it != edges_.end()) return it->second;
    if (q == kRoot) return kRoot;
    q = nodes_[q].failure;
  }
}

DictionaryMatcher::NodeId DictionaryMatcher::run(std::span<const Symbol> text) const {
  NodeId q = kRoot;
  for (Symbol c : text) q = step(q, c);
  return q;
}

void DictionaryMatcher::for_each_match(
    std::span<const Symbol> text, const std::function<void(std::size_t, PatternId)>& report) const {
  NodeId q = kRoot;
  for (std::size_t i = 0; i < text.size(); ++i) {
    q = step(q, text[i]);
    for (NodeId t = nodes_[q].ids.empty() ? nodes_[q].output : q; t != kRoot; t = nodes_[t].output) {
      for (PatternId id : nodes_[t].ids) report(i, id);
    }
  }
}

std::vector<Symbol> ScanResult::at(std::size_t position) const {
  auto it = std::lower_bound(starts.begin(), starts.end(), position,
                             [](const auto& entry, std::size_t p) { return entry.first < p; });
  if (it == starts.end() || it->first != position) return {};
  return it->second;
}

namespace {

std::shared_ptr<const DictionaryMatcher> build_over(const Morphism& phi, bool reversed_images) {
  std::vector<std::vector<Symbol>> texts;
  texts.reserve(phi.images().size());
  for (const auto& x : phi.images()) {
    texts.emplace_back(x.data());
    if (reversed_images) std::reverse(texts.back().begin(), texts.back().end());
  }
  std::vector<DictionaryMatcher::Pattern> patterns;
  for (std::size_t c = 0; c < texts.size(); ++c) {
    patterns.push_back({texts[c], static_cast<DictionaryMatcher::PatternId>(c)});
  }
  return std::make_shared<const DictionaryMatcher>(DictionaryMatcher::build(patterns));
}

// Failure-chain walk from the final state: every non-leaf node on it is a
// suffix of the text that is a proper prefix of some pattern.
std::vector<std::size_t> proper_prefix_depths(const DictionaryMatcher& m, std::span<const Symbol> text) {
  std::vector<std::size_t> depths;
  for (auto q = m.run(text); q != DictionaryMatcher::kRoot; q = m.failure(q)) {
    if (!m.is_leaf(q)) depths.push_back(m.depth(q));
  }
  return depths;
}

}  // namespace

ImageScanner::ImageScanner(const Morphism& phi)
    : phi_(phi), forward_(build_over(phi, false)), backward_(build_over(phi, true)) {}

ImageScanner ImageScanner::reversed() const {
  return ImageScanner(reversal_morphism(phi_), backward_, forward_);
}

ScanResult ImageScanner::scan(const Word& w) const {
  if (!same_alphabet(w.alphabet(), phi_.target())) {
    throw Error(ErrorCode::kAlphabetMismatch, "scanned word is not over the morphism's target alphabet");
  }
  ScanResult r;
  const std::size_t n = w.size();
  r.length = n;

  // Matches arrive ordered by end position; bucket by start instead.
  std::vector<std::vector<Symbol>> by_start(n);
  forward_->for_each_match(w.symbols(), [&](std::size_t end, DictionaryMatcher::PatternId id) {
    const auto c = static_cast<Symbol>(id);
    by_start[end + 1 - phi_.image(c).size()].push_back(c);
    ++r.occ_total;
  });
  for (std::size_t i = 0; i < n; ++i) {
    if (by_start[i].empty()) continue;
    std::sort(by_start[i].begin(), by_start[i].end());
    r.starts.emplace_back(i + 1, std::move(by_start[i]));
  }

  // P_suf: suffix w[i..n] of length d sits at i = n - d + 1.
  for (std::size_t d : proper_prefix_depths(*forward_, w.symbols())) {
    r.proper_prefix_suffixes.push_back(n - d + 1);
  }
  std::sort(r.proper_prefix_suffixes.begin(), r.proper_prefix_suffixes.end());

  // P_pref: read w^R through the reversed-image automaton.
  std::vector<Symbol> rev(w.data().rbegin(), w.data().rend());
  for (std::size_t d : proper_prefix_depths(*backward_, rev)) {
    r.proper_suffix_prefixes.push_back(d);
  }
  std::sort(r.proper_suffix_prefixes.begin(), r.proper_suffix_prefixes.end());
  return r;
}

ScanResult scan(const Morphism& phi, const Word& w) { return ImageScanner(phi).scan(w); }

}  // namespace morphlab
