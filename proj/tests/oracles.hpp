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

// Naive reference implementations on plain strings.  Deliberately share no
// code with the library: source symbols are 'a', 'b', ... in order and a
// morphism is just the vector of its images.

#ifndef MORPHLAB_TESTS_ORACLES_HPP
#define MORPHLAB_TESTS_ORACLES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Images = std::vector<std::string>;

inline std::string apply(const Images& phi, const std::string& u) {
  std::string out;
  for (char c : u) out += phi[static_cast<std::size_t>(c - 'a')];
  return out;
}

inline std::string iterate(const Images& phi, std::string u, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) u = oracle::apply(phi, u);
  return u;
}

inline std::vector<std::size_t> occurrences(const std::string& u, const std::string& w) {
  std::vector<std::size_t> out;
  if (u.size() > w.size()) return out;
  for (std::size_t i = 0; i + u.size() <= w.size(); ++i) {
    if (w.compare(i, u.size(), u) == 0) out.push_back(i + 1);
  }
  return out;
}

inline std::size_t occ(const std::string& u, const std::string& w) { return occurrences(u, w).size(); }

inline std::string spec(const Images& phi) {
  std::string s;
  for (std::size_t c = 0; c < phi.size(); ++c) {
    if (c) s += ';';
    s += std::string(1, static_cast<char>('a' + c)) + "->" + (phi[c].empty() ? "." : phi[c]);
  }
  return s;
}

/// All words over the first `sigma` letters with lengths in [lo, hi], in
/// length-then-lexicographic order.
inline std::vector<std::string> all_words(std::size_t sigma, std::size_t lo, std::size_t hi) {
  std::vector<std::string> out;
  std::vector<std::string> layer{""};
  for (std::size_t len = 0; len <= hi; ++len) {
    if (len >= lo) out.insert(out.end(), layer.begin(), layer.end());
    std::vector<std::string> next;
    for (const auto& w : layer) {
      for (std::size_t c = 0; c < sigma; ++c) next.push_back(w + static_cast<char>('a' + c));
    }
    layer = std::move(next);
  }
  return out;
}

/// Every morphism from {a,b} with images over the first `target` letters of
/// lengths in [1, max_len].
inline std::vector<Images> binary_morphisms(std::size_t target, std::size_t max_len) {
  const auto images = all_words(target, 1, max_len);
  std::vector<Images> out;
  for (const auto& x : images) {
    for (const auto& y : images) out.push_back({x, y});
  }
  return out;
}

/// Smallest colliding pair among source words of length <= max_len, ordered
/// by (|u| + |v|, u, v) with u < v.
inline std::optional<std::pair<std::string, std::string>> collision(const Images& phi, std::size_t max_len) {
  std::map<std::string, std::vector<std::string>> by_image;
  for (const auto& u : all_words(phi.size(), 1, max_len)) by_image[oracle::apply(phi, u)].push_back(u);
  std::optional<std::pair<std::string, std::string>> best;
  auto better = [](const std::pair<std::string, std::string>& a, const std::pair<std::string, std::string>& b) {
    const auto la = a.first.size() + a.second.size();
    const auto lb = b.first.size() + b.second.size();
    if (la != lb) return la < lb;
    return a < b;
  };
  for (const auto& [img, words] : by_image) {
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        auto p = words[i] < words[j] ? std::make_pair(words[i], words[j]) : std::make_pair(words[j], words[i]);
        if (!best || better(p, *best)) best = p;
      }
    }
  }
  for (std::size_t c = 0; c < phi.size(); ++c) {
    if (phi[c].empty()) {
      std::pair<std::string, std::string> p{"", std::string(1, static_cast<char>('a' + c))};
      if (!best || better(p, *best)) best = p;
    }
  }
  return best;
}

/// Number of ways to write w as a concatenation of images (saturating).
inline std::uint64_t count_factorizations(const Images& phi, const std::string& w) {
  std::vector<std::uint64_t> ways(w.size() + 1, 0);
  ways[0] = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!ways[i]) continue;
    for (const auto& x : phi) {
      if (!x.empty() && w.compare(i, x.size(), x) == 0 && i + x.size() <= w.size()) ways[i + x.size()] += ways[i];
    }
  }
  return ways[w.size()];
}

inline bool is_proper_suffix_of_image(const Images& phi, const std::string& x) {
  for (const auto& img : phi) {
    if (x.size() < img.size() && img.compare(img.size() - x.size(), x.size(), x) == 0) return true;
  }
  return false;
}

inline bool is_proper_prefix_of_image(const Images& phi, const std::string& z) {
  for (const auto& img : phi) {
    if (z.size() < img.size() && img.compare(0, z.size(), z) == 0) return true;
  }
  return false;
}

struct Scan {
  std::vector<std::set<char>> starts;  // S_i for i = 1..n at index i - 1
  std::vector<std::size_t> p_pref;
  std::vector<std::size_t> p_suf;
};

inline Scan scan(const Images& phi, const std::string& w) {
  Scan s;
  const std::size_t n = w.size();
  s.starts.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < phi.size(); ++c) {
      if (w.compare(i, phi[c].size(), phi[c]) == 0 && i + phi[c].size() <= n) {
        s.starts[i].insert(static_cast<char>('a' + c));
      }
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    if (is_proper_suffix_of_image(phi, w.substr(0, i))) s.p_pref.push_back(i);
    if (is_proper_prefix_of_image(phi, w.substr(i - 1))) s.p_suf.push_back(i);
  }
  return s;
}

/// Direct definition: some cut w = x . y . z with x . z nonempty, or w
/// strictly inside an image.
inline bool interference_free(const Images& phi, const std::string& u) {
  const std::string w = oracle::apply(phi, u);
  const std::size_t n = w.size();
  for (const auto& img : phi) {
    for (std::size_t s = 1; s + n + 1 <= img.size(); ++s) {
      if (img.compare(s, n, w) == 0) return false;
    }
  }
  for (std::size_t xl = 0; xl <= n; ++xl) {
    if (xl > 0 && !is_proper_suffix_of_image(phi, w.substr(0, xl))) continue;
    for (std::size_t zl = 0; xl + zl <= n; ++zl) {
      if (xl + zl == 0) continue;
      if (zl > 0 && !is_proper_prefix_of_image(phi, w.substr(n - zl))) continue;
      if (count_factorizations(phi, w.substr(xl, n - xl - zl)) > 0) return false;
    }
  }
  return true;
}

/// w = q . r . p with p nonempty, p . q an image, r a concatenation of images.
inline std::uint64_t circular_count(const Images& phi, const std::string& w) {
  std::uint64_t total = 0;
  for (const auto& img : phi) {
    for (std::size_t pl = 1; pl <= img.size(); ++pl) {
      const std::string p = img.substr(0, pl);
      const std::string q = img.substr(pl);
      if (p.size() + q.size() > w.size()) continue;
      if (w.compare(0, q.size(), q) != 0) continue;
      if (w.compare(w.size() - p.size(), p.size(), p) != 0) continue;
      total += count_factorizations(phi, w.substr(q.size(), w.size() - q.size() - p.size()));
    }
  }
  return total;
}

inline bool recognizable(const Images& phi, const std::string& u) {
  const std::string w = oracle::apply(phi, u);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (circular_count(phi, w.substr(i) + w.substr(0, i)) != 1) return false;
  }
  return true;
}

inline std::map<std::string, std::size_t> substring_counts(const std::string& w) {
  std::map<std::string, std::size_t> counts;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t len = 1; i + len <= w.size(); ++len) ++counts[w.substr(i, len)];
  }
  return counts;
}

/// (start, end) 1-based, sorted by start.
inline std::vector<std::pair<std::size_t, std::size_t>> mus(const std::string& w) {
  const auto counts = substring_counts(w);
  auto count = [&](const std::string& s) -> std::size_t {
    if (s.empty()) return w.size() + 1;
    auto it = counts.find(s);
    return it == counts.end() ? 0 : it->second;
  };
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t len = 1; i + len <= w.size(); ++len) {
      const std::string s = w.substr(i, len);
      if (count(s) == 1 && count(s.substr(1)) >= 2 && count(s.substr(0, len - 1)) >= 2) {
        out.emplace_back(i + 1, i + len);
      }
    }
  }
  return out;
}

inline std::vector<std::pair<std::size_t, std::size_t>> net_occurrences(const std::string& w) {
  const auto counts = substring_counts(w);
  auto count = [&](const std::string& s) -> std::size_t {
    auto it = counts.find(s);
    return it == counts.end() ? 0 : it->second;
  };
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t len = 1; i + len <= n; ++len) {
      if (count(w.substr(i, len)) < 2) continue;
      const bool left = i == 0 || count(w.substr(i - 1, len + 1)) == 1;
      const bool right = i + len == n || count(w.substr(i, len + 1)) == 1;
      if (left && right) out.emplace_back(i + 1, i + len);
    }
  }
  return out;
}

inline std::string fibonacci(std::size_t i) { return i == 1 ? "b" : iterate({"ab", "a"}, "b", i - 1); }
inline std::string thue_morse(std::size_t i) { return iterate({"ab", "ba"}, "a", i - 1); }

inline std::string random_word(std::mt19937_64& rng, std::size_t sigma, std::size_t lo, std::size_t hi) {
  std::uniform_int_distribution<std::size_t> len(lo, hi);
  std::uniform_int_distribution<int> sym(0, static_cast<int>(sigma) - 1);
  std::string w(len(rng), 'a');
  for (auto& c : w) c = static_cast<char>('a' + sym(rng));
  return w;
}

}  // namespace oracle

#endif  // MORPHLAB_TESTS_ORACLES_HPP
