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

#ifndef MORPHLAB_MATCHER_HPP
#define MORPHLAB_MATCHER_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "morphlab/morphism.hpp"
#include "morphlab/words.hpp"

namespace morphlab {

/**
 * Aho-Corasick automaton over a fixed set of nonempty patterns.
 *
 * Trie edges live in one hash table keyed by (node, symbol), so a goto
 * lookup is expected O(1) regardless of alphabet size.  Every node carries a
 * failure link (longest proper suffix of its string that is a trie node) and
 * an output link (nearest terminal node on the failure chain).
 */
class DictionaryMatcher {
 public:
  using NodeId = std::uint32_t;
  using PatternId = std::uint32_t;
  static constexpr NodeId kRoot = 0;

  struct Pattern {
    std::span<const Symbol> text;
    PatternId id;
  };

  /// Throws ErrorCode::kErasingImage on an empty pattern and
  /// kInvalidArgument on an empty pattern list.
  static DictionaryMatcher build(std::span<const Pattern> patterns);

  NodeId step(NodeId q, Symbol c) const;
  NodeId failure(NodeId q) const { return nodes_[q].failure; }
  NodeId output_link(NodeId q) const { return nodes_[q].output; }
  std::size_t depth(NodeId q) const { return nodes_[q].depth; }
  bool is_leaf(NodeId q) const { return nodes_[q].children == 0; }
  /// Ids of patterns equal to str(q).
  std::span<const PatternId> patterns_at(NodeId q) const { return nodes_[q].ids; }
  std::size_t node_count() const { return nodes_.size(); }

  /// State after reading all of `text` from the root.
  NodeId run(std::span<const Symbol> text) const;

  /// Calls `report(end, id)` for every pattern occurrence, `end` being the
  /// 0-based index of its last symbol.
  void for_each_match(std::span<const Symbol> text,
                      const std::function<void(std::size_t, PatternId)>& report) const;

 private:
  struct Node {
    NodeId failure = kRoot;
    NodeId output = kRoot;
    std::uint32_t depth = 0;
    std::uint32_t children = 0;
    std::vector<PatternId> ids;
  };

  static std::uint64_t key(NodeId q, Symbol c) {
    return (static_cast<std::uint64_t>(q) << 8) | c;
  }
  NodeId child(NodeId q, Symbol c) const;

  std::vector<Node> nodes_;
  std::unordered_map<std::uint64_t, NodeId> edges_;
};

/// S(w), P_pref(w), P_suf(w) for a word w over the target alphabet.
/// Positions are 1-based.
struct ScanResult {
  std::size_t length = 0;
  /// Sparse S: (position, source symbols whose image starts there), sorted
  /// by position; positions with empty S_i are omitted.
  std::vector<std::pair<std::size_t, std::vector<Symbol>>> starts;
  /// i such that w[1..i] is a proper suffix of some image, ascending.
  std::vector<std::size_t> proper_suffix_prefixes;
  /// i such that w[i..n] is a proper prefix of some image, ascending.
  std::vector<std::size_t> proper_prefix_suffixes;
  /// sum of |S_i|.
  std::size_t occ_total = 0;

  /// S_i as a dense lookup (empty for positions without image starts).
  std::vector<Symbol> at(std::size_t position) const;
};

/**
 * The pair of automata Algorithm-style interference checks need: one over
 * Img(phi) for S and P_suf, one over the reversed images (read against the
 * reversed text) for P_pref.  `reversed()` swaps the two, giving the scanner
 * for phi^R without rebuilding anything.
 */
class ImageScanner {
 public:
  explicit ImageScanner(const Morphism& phi);

  const Morphism& morphism() const noexcept { return phi_; }
  ImageScanner reversed() const;

  ScanResult scan(const Word& w) const;

  const DictionaryMatcher& forward() const noexcept { return *forward_; }
  const DictionaryMatcher& backward() const noexcept { return *backward_; }

 private:
  ImageScanner(Morphism phi, std::shared_ptr<const DictionaryMatcher> forward,
               std::shared_ptr<const DictionaryMatcher> backward)
      : phi_(std::move(phi)), forward_(std::move(forward)), backward_(std::move(backward)) {}

  Morphism phi_;
  std::shared_ptr<const DictionaryMatcher> forward_;
  std::shared_ptr<const DictionaryMatcher> backward_;
};

/// Convenience: builds an ImageScanner and scans once.
ScanResult scan(const Morphism& phi, const Word& w);

}  // namespace morphlab

#endif  // MORPHLAB_MATCHER_HPP
