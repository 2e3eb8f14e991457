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

#include "morphlab/morphism.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>
#include <map>
#include <mutex>

#include "morphlab/error.hpp"

namespace morphlab {

struct Morphism::State {
  AlphabetPtr source;
  AlphabetPtr target;
  std::vector<Word> images;
  std::size_t total_length = 0;
  std::size_t max_length = 0;

  std::once_flag injectivity_once;
  InjectivityResult injectivity;
};

Morphism::Morphism(AlphabetPtr source, AlphabetPtr target, std::vector<Word> images)
    : state_(std::make_shared<State>()) {
  if (!source || !target) {
    throw Error(ErrorCode::kInvalidArgument, "morphism requires source and target alphabets");
  }
  if (images.size() != source->size()) {
    throw Error(ErrorCode::kInvalidArgument, "morphism needs exactly one image per source symbol");
  }
  for (const auto& x : images) {
    if (!same_alphabet(x.alphabet(), target)) {
      throw Error(ErrorCode::kAlphabetMismatch, "image is not a word over the target alphabet");
    }
    state_->total_length += x.size();
    state_->max_length = std::max(state_->max_length, x.size());
  }
  state_->source = std::move(source);
  state_->target = std::move(target);
  state_->images = std::move(images);
}

Morphism Morphism::parse(std::string_view spec) {
  std::string compact;
  for (char c : spec) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  std::map<char, std::string> rules;
  std::size_t pos = 0;
  while (pos < compact.size()) {
    std::size_t end = compact.find(';', pos);
    if (end == std::string::npos) end = compact.size();
    std::string_view rule(compact.data() + pos, end - pos);
    pos = end + 1;
    if (rule.empty()) continue;
    if (rule.size() < 3 || rule.substr(1, 2) != "->") {
      throw Error(ErrorCode::kParse, "malformed rule '" + std::string(rule) + "', expected <symbol>-><image>");
    }
    char lhs = rule[0];
    std::string rhs(rule.substr(3));
    if (rhs.empty()) {
      throw Error(ErrorCode::kParse, std::string("empty image for '") + lhs + "', write '.' for the empty word");
    }
    if (rhs == ".") rhs.clear();
    if (!rules.emplace(lhs, rhs).second) {
      throw Error(ErrorCode::kParse, std::string("symbol '") + lhs + "' mapped twice");
    }
  }
  if (rules.empty()) throw Error(ErrorCode::kParse, "morphism has no rules");

  std::string source_symbols;
  std::string all_symbols;
  for (const auto& [lhs, rhs] : rules) {
    source_symbols.push_back(lhs);
    all_symbols.push_back(lhs);
    all_symbols += rhs;
  }
  AlphabetPtr source;
  AlphabetPtr target;
  try {
    source = Alphabet::create(source_symbols);
    target = Alphabet::of(all_symbols);
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  if (*target == *source) target = source;

  std::vector<Word> images;
  images.reserve(rules.size());
  for (const auto& [lhs, rhs] : rules) images.push_back(Word::parse(target, rhs));
  return Morphism(source, target, std::move(images));
}

const AlphabetPtr& Morphism::source() const noexcept { return state_->source; }
const AlphabetPtr& Morphism::target() const noexcept { return state_->target; }
const Word& Morphism::image(Symbol c) const { return state_->images.at(c); }
std::span<const Word> Morphism::images() const noexcept { return state_->images; }
std::size_t Morphism::total_length() const noexcept { return state_->total_length; }
std::size_t Morphism::max_image_length() const noexcept { return state_->max_length; }

bool Morphism::is_non_erasing() const noexcept {
  return std::none_of(state_->images.begin(), state_->images.end(),
                      [](const Word& x) { return x.empty(); });
}

std::optional<std::size_t> Morphism::uniform_length() const noexcept {
  const auto& imgs = state_->images;
  std::size_t len = imgs.front().size();
  for (const auto& x : imgs) {
    if (x.size() != len) return std::nullopt;
  }
  return len;
}

bool Morphism::is_endomorphism() const noexcept {
  return same_alphabet(state_->source, state_->target);
}

std::string Morphism::to_string() const {
  std::string s;
  for (std::size_t c = 0; c < state_->images.size(); ++c) {
    if (c) s.push_back(';');
    s.push_back(state_->source->symbol(static_cast<Symbol>(c)));
    s += "->";
    s += state_->images[c].empty() ? std::string(".") : state_->images[c].str();
  }
  return s;
}

namespace {

// Injectivity as reachability over "dangling suffixes": after feeding a
// prefix of u to one side and of v to the other, the side that is ahead
// leaves a suffix of one of its images uncovered.  phi is non-injective iff
// some start (two distinct first symbols, one image a prefix of the other)
// reaches an empty dangling suffix.  Each edge appends one source symbol, so
// BFS distances give the minimal |u| + |v|.
class DanglingSearch {
 public:
  explicit DanglingSearch(const Morphism& phi) : phi_(phi) {}

  InjectivityResult run() {
    InjectivityResult result;
    const auto sigma = phi_.source()->size();
    for (std::size_t c = 0; c < sigma; ++c) {
      if (phi_.image(static_cast<Symbol>(c)).empty()) {
        result.witness = NonInjectivityWitness{
            Word(phi_.source()), Word(phi_.source(), {static_cast<Symbol>(c)})};
        return result;
      }
    }
    explore();
    std::size_t best = kInf;
    for (const auto& s : starts_) {
      if (distance(s.target) != kInf) best = std::min(best, s.cost + distance(s.target));
    }
    if (best == kInf) {
      result.injective = true;
      return result;
    }
    enumerate_minimal(best);
    result.witness = NonInjectivityWitness{Word(phi_.source(), best_u_), Word(phi_.source(), best_v_)};
    return result;
  }

 private:
  static constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  static constexpr std::size_t kGoal = 0;
  static constexpr std::size_t kPathCap = 100000;

  // A state is a dangling suffix plus which side (0 = u, 1 = v) is ahead.
  struct Node {
    std::vector<Symbol> dangling;
    int ahead = 0;
  };
  struct Edge {
    Symbol symbol;
    std::size_t to;
  };
  struct Start {
    Symbol first_u;
    Symbol first_v;
    std::size_t target;
    std::size_t cost;
  };

  std::size_t intern(std::vector<Symbol> dangling, int ahead) {
    if (dangling.empty()) return kGoal;
    auto key = std::make_pair(dangling, ahead);
    auto it = ids_.find(key);
    if (it != ids_.end()) return it->second;
    std::size_t id = nodes_.size();
    ids_.emplace(std::move(key), id);
    nodes_.push_back(Node{std::move(dangling), ahead});
    edges_.emplace_back();
    pending_.push_back(id);
    return id;
  }

  // Outcome of feeding image `x` to the lagging side when `d` is dangling
  // on side `ahead`; nullopt if the words disagree.
  std::optional<std::pair<std::vector<Symbol>, int>> feed(const std::vector<Symbol>& d, int ahead,
                                                          std::span<const Symbol> x) const {
    if (x.size() <= d.size()) {
      if (!std::equal(x.begin(), x.end(), d.begin())) return std::nullopt;
      return std::make_pair(std::vector<Symbol>(d.begin() + static_cast<std::ptrdiff_t>(x.size()), d.end()),
                            ahead);
    }
    if (!std::equal(d.begin(), d.end(), x.begin())) return std::nullopt;
    return std::make_pair(std::vector<Symbol>(x.begin() + static_cast<std::ptrdiff_t>(d.size()), x.end()),
                          1 - ahead);
  }

  void explore() {
    nodes_.push_back(Node{});  // goal sentinel
    edges_.emplace_back();
    const auto sigma = phi_.source()->size();
    for (std::size_t a = 0; a < sigma; ++a) {
      for (std::size_t b = a + 1; b < sigma; ++b) {
        const auto& xa = phi_.image(static_cast<Symbol>(a)).data();
        const auto& xb = phi_.image(static_cast<Symbol>(b)).data();
        // u starts with a, v with b; v is "ahead" by the tail of xb.
        auto next = feed(xb, 1, xa);
        if (!next) continue;
        std::size_t id = intern(std::move(next->first), next->second);
        starts_.push_back(Start{static_cast<Symbol>(a), static_cast<Symbol>(b), id, 2});
      }
    }
    while (!pending_.empty()) {
      std::size_t id = pending_.front();
      pending_.pop_front();
      for (std::size_t c = 0; c < sigma; ++c) {
        auto next = feed(nodes_[id].dangling, nodes_[id].ahead, phi_.image(static_cast<Symbol>(c)).data());
        if (!next) continue;
        std::size_t to = intern(std::move(next->first), next->second);
        edges_[id].push_back(Edge{static_cast<Symbol>(c), to});
      }
    }
    // Reverse BFS from the goal for "symbols still needed".
    dist_.assign(nodes_.size(), kInf);
    std::vector<std::vector<std::size_t>> reverse(nodes_.size());
    for (std::size_t id = 0; id < nodes_.size(); ++id) {
      for (const auto& e : edges_[id]) reverse[e.to].push_back(id);
    }
    std::deque<std::size_t> queue{kGoal};
    dist_[kGoal] = 0;
    while (!queue.empty()) {
      std::size_t id = queue.front();
      queue.pop_front();
      for (std::size_t from : reverse[id]) {
        if (dist_[from] == kInf) {
          dist_[from] = dist_[id] + 1;
          queue.push_back(from);
        }
      }
    }
  }

  std::size_t distance(std::size_t id) const { return dist_[id]; }

  void consider(const std::vector<Symbol>& u, const std::vector<Symbol>& v) {
    if (!found_ || std::tie(u, v) < std::tie(best_u_, best_v_)) {
      best_u_ = u;
      best_v_ = v;
      found_ = true;
    }
  }

  void descend(std::size_t id, std::vector<Symbol>& u, std::vector<Symbol>& v) {
    if (paths_ >= kPathCap) return;
    if (id == kGoal) {
      ++paths_;
      consider(u, v);
      return;
    }
    auto& lagging = nodes_[id].ahead == 0 ? v : u;
    for (const auto& e : edges_[id]) {
      if (dist_[e.to] == kInf || dist_[e.to] + 1 != dist_[id]) continue;
      lagging.push_back(e.symbol);
      descend(e.to, u, v);
      lagging.pop_back();
    }
  }

  // All witnesses of minimal total length, keeping the lexicographically
  // smallest.  The path cap only matters for pathological morphisms; the
  // result is still a valid witness if it is hit.
  void enumerate_minimal(std::size_t total) {
    for (const auto& s : starts_) {
      if (dist_[s.target] == kInf || s.cost + dist_[s.target] != total) continue;
      std::vector<Symbol> u{s.first_u};
      std::vector<Symbol> v{s.first_v};
      descend(s.target, u, v);
    }
  }

  const Morphism& phi_;
  std::vector<Node> nodes_;
  std::vector<std::vector<Edge>> edges_;
  std::map<std::pair<std::vector<Symbol>, int>, std::size_t> ids_;
  std::deque<std::size_t> pending_;
  std::vector<Start> starts_;
  std::vector<std::size_t> dist_;

  std::size_t paths_ = 0;
  bool found_ = false;
  std::vector<Symbol> best_u_;
  std::vector<Symbol> best_v_;
};

}  // namespace

const InjectivityResult& Morphism::injectivity() const {
  std::call_once(state_->injectivity_once,
                 [this] { state_->injectivity = DanglingSearch(*this).run(); });
  return state_->injectivity;
}

Word apply(const Morphism& phi, const Word& u) {
  if (!same_alphabet(u.alphabet(), phi.source())) {
    throw Error(ErrorCode::kAlphabetMismatch, "word '" + u.str() + "' is not over the morphism's source alphabet");
  }
  std::size_t len = 0;
  for (Symbol c : u.symbols()) len += phi.image(c).size();
  std::vector<Symbol> out;
  out.reserve(len);
  for (Symbol c : u.symbols()) {
    const auto& x = phi.image(c).data();
    out.insert(out.end(), x.begin(), x.end());
  }
  return Word(phi.target(), std::move(out));
}

Word iterate(const Morphism& phi, const Word& u, std::size_t k) {
  if (k >= 2 && !phi.is_endomorphism()) {
    throw Error(ErrorCode::kNotEndomorphism, "iterating a morphism whose images leave the source alphabet");
  }
  if (k == 0) return u;
  Word w = apply(phi, u);
  for (std::size_t i = 1; i < k; ++i) w = apply(phi, w);
  return w;
}

Morphism reversal_morphism(const Morphism& phi) {
  std::vector<Word> images;
  images.reserve(phi.images().size());
  for (const auto& x : phi.images()) images.push_back(reverse(x));
  return Morphism(phi.source(), phi.target(), std::move(images));
}

}  // namespace morphlab
