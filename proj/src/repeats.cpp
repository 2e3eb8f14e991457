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

#include "morphlab/repeats.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "morphlab/classic_words.hpp"
#include "morphlab/error.hpp"
#include "morphlab/interference.hpp"

namespace morphlab {

namespace {

// Prefix doubling with counting sorts, O(n log n).
std::vector<std::size_t> suffix_array(std::span<const Symbol> s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> sa(n), rank(n), tmp(n), cnt;
  if (n == 0) return sa;
  for (std::size_t i = 0; i < n; ++i) rank[i] = s[i];
  std::size_t classes = 256;
  std::iota(sa.begin(), sa.end(), 0);
  std::stable_sort(sa.begin(), sa.end(), [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
  for (std::size_t len = 1;; len <<= 1) {
    // Order by (rank[i], rank[i + len]) with "past the end" smallest: sort
    // by second key by shifting, then a stable counting sort on the first.
    std::vector<std::size_t> by_second;
    by_second.reserve(n);
    for (std::size_t i = n - std::min(len, n); i < n; ++i) by_second.push_back(i);
    for (std::size_t i : sa) {
      if (i >= len) by_second.push_back(i - len);
    }
    cnt.assign(classes + 1, 0);
    for (std::size_t i = 0; i < n; ++i) ++cnt[rank[i] + 1];
    for (std::size_t c = 1; c <= classes; ++c) cnt[c] += cnt[c - 1];
    for (std::size_t i : by_second) sa[cnt[rank[i]]++] = i;

    auto key2 = [&](std::size_t i) -> std::ptrdiff_t {
      return i + len < n ? static_cast<std::ptrdiff_t>(rank[i + len]) : -1;
    };
    tmp[sa[0]] = 0;
    for (std::size_t k = 1; k < n; ++k) {
      const bool same = rank[sa[k]] == rank[sa[k - 1]] && key2(sa[k]) == key2(sa[k - 1]);
      tmp[sa[k]] = tmp[sa[k - 1]] + (same ? 0 : 1);
    }
    rank.swap(tmp);
    classes = rank[sa[n - 1]] + 1;
    if (classes == n || len >= n) break;
  }
  return sa;
}

// Kasai: lcp[k] = LCP(suffix sa[k-1], suffix sa[k]), lcp[0] = 0.
std::vector<std::size_t> lcp_array(std::span<const Symbol> s, const std::vector<std::size_t>& sa) {
  const std::size_t n = s.size();
  std::vector<std::size_t> rank(n), lcp(n, 0);
  for (std::size_t k = 0; k < n; ++k) rank[sa[k]] = k;
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = sa[rank[i] - 1];
    while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
    lcp[rank[i]] = h;
    if (h > 0) --h;
  }
  return lcp;
}

std::set<std::string> contents(const std::vector<MusOccurrence>& mus) {
  std::set<std::string> out;
  for (const auto& m : mus) out.insert(m.content.str());
  return out;
}

std::string join(const std::set<std::string>& items) {
  std::string s;
  for (const auto& x : items) {
    if (!s.empty()) s.push_back(',');
    s += x;
  }
  return s;
}

std::string intervals_to_string(const std::vector<NetOccurrence>& v) {
  std::string s;
  for (const auto& o : v) {
    if (!s.empty()) s.push_back(' ');
    s += "[" + std::to_string(o.start) + "," + std::to_string(o.end) + "]";
  }
  return s;
}

}  // namespace

std::vector<std::size_t> longest_repeated_prefixes(const Word& w) {
  const auto s = w.symbols();
  const std::size_t n = s.size();
  std::vector<std::size_t> repeated(n, 0);
  if (n == 0) return repeated;
  const auto sa = suffix_array(s);
  const auto lcp = lcp_array(s, sa);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = lcp[k];
    if (k + 1 < n) best = std::max(best, lcp[k + 1]);
    repeated[sa[k]] = best;
  }
  return repeated;
}

std::vector<MusOccurrence> compute_mus(const Word& w) {
  if (w.empty()) throw Error(ErrorCode::kEmptyWord, "MUS of the empty word");
  const std::size_t n = w.size();
  const auto repeated = longest_repeated_prefixes(w);
  // Shortest unique substring starting at i ends at i + repeated[i]
  // (0-based, inclusive) when that stays inside w.
  auto unique_end = [&](std::size_t i) -> std::size_t {
    return i + repeated[i] < n ? i + repeated[i] : n;  // n = none
  };
  std::vector<MusOccurrence> out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t end = unique_end(i);
    if (end == n) continue;
    // Left trim w[i+1..end] must be repeated: the next start's shortest
    // unique substring reaches past `end`.
    if (i + 1 < n && end > i && unique_end(i + 1) <= end) continue;
    out.push_back(MusOccurrence{i + 1, end + 1, w.substr(i, end - i + 1)});
  }
  return out;
}

std::vector<NetOccurrence> compute_net_occurrences(const Word& w) {
  if (w.empty()) throw Error(ErrorCode::kEmptyWord, "net occurrences of the empty word");
  const auto repeated = longest_repeated_prefixes(w);
  std::vector<NetOccurrence> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    // The only repeated w[i..j] with a unique right extension has length
    // repeated[i]; its left extension is unique iff it is not repeated.
    if (repeated[i] == 0) continue;
    if (i > 0 && repeated[i - 1] > repeated[i]) continue;
    out.push_back(NetOccurrence{i + 1, i + repeated[i]});
  }
  return out;
}

std::vector<NetOccurrence> mus_to_net(std::span<const MusOccurrence> mus, std::size_t n) {
  if (mus.empty()) throw Error(ErrorCode::kInvalidArgument, "mus_to_net needs at least one MUS");
  std::vector<NetOccurrence> out;
  auto push = [&](std::size_t start, std::size_t end) {
    if (start <= end) out.push_back(NetOccurrence{start, end});
  };
  push(1, mus.front().end - 1);
  for (std::size_t k = 0; k + 1 < mus.size(); ++k) push(mus[k].start + 1, mus[k + 1].end - 1);
  push(mus.back().start + 1, n);
  return out;
}

OccPreservationReport verify_occurrence_preservation(const Morphism& phi, const Word& u, const Word& v,
                                                     std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "occurrence preservation needs k >= 1");
  InterferenceChecker checker(phi);
  OccPreservationReport r;

  Word level = u;
  r.preconditions_hold = true;
  for (std::size_t i = 0; i < k; ++i) {
    if (!checker.check(level).interference_free) {
      r.preconditions_hold = false;
      r.failing_level = i;
      break;
    }
    if (i + 1 < k) level = apply(phi, level);
  }

  const Word image_u = iterate(phi, u, k);
  const Word image_v = iterate(phi, v, k);
  const auto source = occurrences(u, v);
  const auto image = occurrences(image_u, image_v);
  r.source_count = source.count();
  r.image_count = image.count();
  r.counts_equal = r.source_count == r.image_count;

  // |phi^k(c)| per source symbol, then prefix lengths along v.
  const std::size_t sigma = phi.source()->size();
  // The first step reads image lengths directly: image symbols need not be
  // source symbols unless k >= 2 (which iterate() already enforces).
  std::vector<std::size_t> len(sigma);
  for (std::size_t c = 0; c < sigma; ++c) len[c] = phi.image(static_cast<Symbol>(c)).size();
  for (std::size_t step = 1; step < k; ++step) {
    std::vector<std::size_t> next(sigma, 0);
    for (std::size_t c = 0; c < sigma; ++c) {
      for (Symbol d : phi.image(static_cast<Symbol>(c)).symbols()) {
        next[c] += len[d];
      }
    }
    len = std::move(next);
  }
  std::vector<std::size_t> offset(v.size() + 1, 0);
  for (std::size_t p = 0; p < v.size(); ++p) offset[p + 1] = offset[p] + len[v[p]];
  std::vector<std::size_t> mapped;
  mapped.reserve(source.count());
  for (std::size_t p : source.positions) mapped.push_back(offset[p - 1] + 1);
  r.bijection_holds = mapped == image.positions;
  return r;
}

VerificationReport verify_fibonacci_mus(std::size_t from, std::size_t to) {
  if (from < 6 || to < from) {
    throw Error(ErrorCode::kOutOfRange, "Fibonacci MUS closed form holds for orders >= 6");
  }
  VerificationReport report;
  const auto ab = Alphabet::binary();
  for (std::size_t i = from; i <= to; ++i) {
    const Word alpha = Word::parse(ab, i % 2 == 0 ? "a" : "b");
    const Word other = flip(alpha);
    const std::set<std::string> expected{(alpha + fibonacci_G(i - 3) + alpha).str(),
                                         (other + fibonacci_G(i - 2) + other).str()};
    const auto got = contents(compute_mus(fibonacci_word(i)));
    report.add("fibonacci-mus i=" + std::to_string(i), got == expected,
               "mus=" + join(got) + " expected=" + join(expected));
  }
  return report;
}

VerificationReport verify_tm_mus(std::size_t from, std::size_t to) {
  if (from < 5 || to < from) {
    throw Error(ErrorCode::kOutOfRange, "Thue-Morse MUS closed form holds for orders >= 5");
  }
  VerificationReport report;
  for (std::size_t i = from; i <= to; ++i) {
    const Word base = thue_morse_word(i - 3);
    std::set<std::string> expected;
    for (const auto& e : extensions(base)) expected.insert(e.str());
    for (const auto& e : extensions(flip(base))) expected.insert(e.str());
    const auto got = contents(compute_mus(thue_morse_word(i)));
    report.add("tm-mus i=" + std::to_string(i), got == expected && got.size() == 8,
               "count=" + std::to_string(got.size()) + " mus=" + join(got));
  }
  return report;
}

VerificationReport verify_net_closed_forms(std::size_t fib_max, std::size_t tm_max) {
  VerificationReport report;
  auto all_of_word = [](const Word& pattern, const Word& text, std::vector<NetOccurrence>& out) {
    for (std::size_t p : occurrences(pattern, text).positions) {
      out.push_back(NetOccurrence{p, p + pattern.size() - 1});
    }
  };
  auto check = [&](const std::string& label, const Word& w, std::vector<NetOccurrence> expected) {
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    const auto net = compute_net_occurrences(w);
    const auto dual = mus_to_net(compute_mus(w), w.size());
    report.add(label + " closed-form", net == expected,
               "net=" + intervals_to_string(net) + " expected=" + intervals_to_string(expected));
    report.add(label + " mus-duality", dual == net, "from-mus=" + intervals_to_string(dual));
  };
  for (std::size_t i = 7; i <= fib_max; ++i) {
    const Word f = fibonacci_word(i);
    std::vector<NetOccurrence> expected;
    all_of_word(fibonacci_G(i - 1), f, expected);
    const Word f2 = fibonacci_word(i - 2);
    const auto occ = occurrences(f2, f);
    if (!occ.positions.empty()) {
      const std::size_t p = occ.positions.back();
      expected.push_back(NetOccurrence{p, p + f2.size() - 1});
    }
    check("net F_" + std::to_string(i), f, std::move(expected));
  }
  for (std::size_t i = 5; i <= tm_max; ++i) {
    const Word t = thue_morse_word(i);
    std::vector<NetOccurrence> expected;
    all_of_word(thue_morse_word(i - 2), t, expected);
    all_of_word(flip(thue_morse_word(i - 2)), t, expected);
    all_of_word(thue_morse_word(i - 4) + flip(thue_morse_word(i - 3)), t, expected);
    all_of_word(flip(thue_morse_word(i - 4)) + thue_morse_word(i - 3), t, expected);
    check("net tm_" + std::to_string(i), t, std::move(expected));
  }
  return report;
}

VerificationReport verify_occ_lemmas(const OccLemmaRanges& ranges) {
  VerificationReport report;
  if (ranges.fib_max >= 6) {
    const auto c = occ_count(fibonacci_word(4), fibonacci_word(6));
    report.add("occ(F_4,F_6)=3", c == 3, "count=" + std::to_string(c));
  }
  // occ(F_{i-d}, F_i) for i - d >= 4.
  for (std::size_t d = 1; d + 4 <= ranges.fib_max; ++d) {
    std::set<std::size_t> seen;
    std::string detail;
    for (std::size_t i = d + 4; i <= ranges.fib_max; ++i) {
      const auto c = occ_count(fibonacci_word(i - d), fibonacci_word(i));
      seen.insert(c);
      detail += (detail.empty() ? "" : ",") + std::to_string(c);
    }
    report.add("occ(F_{i-" + std::to_string(d) + "},F_i) constant", seen.size() == 1, "counts=" + detail);
  }
  // occ(tm_{i-d}, tm_i) and occ(flip tm_{i-d}, tm_i) for i - d >= 2.
  for (std::size_t d = 1; d + 2 <= ranges.tm_max; ++d) {
    std::set<std::size_t> plain, flipped;
    std::string detail;
    for (std::size_t i = d + 2; i <= ranges.tm_max; ++i) {
      const Word t = thue_morse_word(i);
      const Word p = thue_morse_word(i - d);
      const auto c1 = occ_count(p, t);
      const auto c2 = occ_count(flip(p), t);
      plain.insert(c1);
      flipped.insert(c2);
      detail += (detail.empty() ? "" : ",") + std::to_string(c1) + "/" + std::to_string(c2);
    }
    report.add("occ(tm_{i-" + std::to_string(d) + "},tm_i) constant", plain.size() == 1 && flipped.size() == 1,
               "counts(plain/flip)=" + detail);
  }
  // occ(F_k^<, F_i) = occ(F_k, F_i).
  for (std::size_t k = 4; k <= ranges.lpp_max; ++k) {
    const Word fk = fibonacci_word(k);
    const Word lpp = longest_proper_prefix(fk);
    bool ok = true;
    std::string detail;
    for (std::size_t i = k; i <= ranges.lpp_max; ++i) {
      const Word fi = fibonacci_word(i);
      const auto a = occ_count(lpp, fi);
      const auto b = occ_count(fk, fi);
      if (a != b) {
        ok = false;
        detail += "i=" + std::to_string(i) + ":" + std::to_string(a) + "!=" + std::to_string(b) + " ";
      }
    }
    report.add("occ(F_" + std::to_string(k) + "^<,F_i)=occ(F_" + std::to_string(k) + ",F_i)", ok, detail);
  }
  if (ranges.tm_max >= 5) {
    const auto c = occ_count(thue_morse_word(2), thue_morse_word(5));
    report.add("occ(tm_2,tm_5) measured", true, "count=" + std::to_string(c));
  }
  return report;
}

VerificationReport verify_occ_preservation_suite(std::size_t max_order) {
  if (max_order < 5) throw Error(ErrorCode::kOutOfRange, "occurrence preservation suite needs max order >= 5");
  VerificationReport report;
  const auto ab = Alphabet::binary();
  const Morphism& fib = fibonacci_morphism();
  const Morphism& tm = thue_morse_morphism();

  struct Fixture {
    const char* name;
    const Morphism* phi;
    const char* u;
    const char* v;
  };
  const Fixture fixtures[] = {
      {"thue-morse", &tm, "ab", "abaab"},
      {"fibonacci", &fib, "ab", "abaab"},
      {"thue-morse", &tm, "aa", "aabbb"},
      {"fibonacci", &fib, "aa", "aabbb"},
  };
  for (const auto& f : fixtures) {
    const auto r = verify_occurrence_preservation(*f.phi, Word::parse(ab, f.u), Word::parse(ab, f.v), 1);
    report.add(std::string("fixture ") + f.name + " u=" + f.u + " v=" + f.v, r.consistent(),
               "if=" + std::string(r.preconditions_hold ? "yes" : "no") + " occ=" +
                   std::to_string(r.source_count) + (r.counts_equal ? "=" : "<") + std::to_string(r.image_count));
  }

  for (std::size_t j = 4; j <= max_order; j += 2) {
    for (std::size_t i = j; i <= max_order; ++i) {
      const auto r = verify_occurrence_preservation(fib, fibonacci_word(j), fibonacci_word(i), 1);
      report.add("fibonacci u=F_" + std::to_string(j) + " v=F_" + std::to_string(i),
                 r.preconditions_hold && r.counts_equal && r.bijection_holds,
                 "occ=" + std::to_string(r.source_count) + "/" + std::to_string(r.image_count));
    }
  }
  for (std::size_t j = 4; j <= max_order; ++j) {
    for (std::size_t i = j; i <= max_order; ++i) {
      const auto r = verify_occurrence_preservation(tm, thue_morse_word(j), thue_morse_word(i), 2);
      report.add("thue-morse u=tm_" + std::to_string(j) + " v=tm_" + std::to_string(i) + " k=2",
                 r.preconditions_hold && r.counts_equal && r.bijection_holds,
                 "occ=" + std::to_string(r.source_count) + "/" + std::to_string(r.image_count));
    }
  }
  return report;
}

}  // namespace morphlab
