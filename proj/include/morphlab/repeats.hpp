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
 * @file    repeats.hpp
 * @brief   Minimal unique substrings, net occurrences, and the occurrence-
 *          preservation and closed-form verification sweeps built on them.
 *
 * Intervals are 1-based and inclusive.  Both MUS and net occurrences come
 * out of one suffix array + LCP pass: for each suffix the length of its
 * longest repeated prefix determines the only candidate of either kind
 * starting there.
 */

#ifndef MORPHLAB_REPEATS_HPP
#define MORPHLAB_REPEATS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "morphlab/morphism.hpp"
#include "morphlab/report.hpp"
#include "morphlab/words.hpp"

namespace morphlab {

struct MusOccurrence {
  std::size_t start = 0;
  std::size_t end = 0;
  Word content;
};

struct NetOccurrence {
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const NetOccurrence&) const = default;
  auto operator<=>(const NetOccurrence&) const = default;
};

/// For each 0-based i, the length of the longest prefix of w[i..] that
/// occurs at least twice in w.
std::vector<std::size_t> longest_repeated_prefixes(const Word& w);

/// Sorted by start.
std::vector<MusOccurrence> compute_mus(const Word& w);
/// Sorted by start.
std::vector<NetOccurrence> compute_net_occurrences(const Word& w);

/// Net occurrences from the MUS list:
/// [1, j_1 - 1], [i_1 + 1, j_2 - 1], ..., [i_m + 1, n], dropping empty
/// intervals.  Throws on an empty list.
std::vector<NetOccurrence> mus_to_net(std::span<const MusOccurrence> mus, std::size_t n);

struct OccPreservationReport {
  /// phi interference-free on phi^i(u) for every 0 <= i < k.
  bool preconditions_hold = false;
  /// First level i at which interference-freeness fails.
  std::optional<std::size_t> failing_level;
  std::size_t source_count = 0;  ///< occ_u(v)
  std::size_t image_count = 0;   ///< occ_{phi^k(u)}(phi^k(v))
  bool counts_equal = false;
  /// p in Occ_u(v)  <=>  |phi^k(v[1..p-1])| + 1 in Occ_{phi^k(u)}(phi^k(v)).
  bool bijection_holds = false;

  /// Under the preconditions both equalities must hold; otherwise the
  /// report is informational and always "passes".
  bool consistent() const { return !preconditions_hold || (counts_equal && bijection_holds); }
};

OccPreservationReport verify_occurrence_preservation(const Morphism& phi, const Word& u, const Word& v,
                                                     std::size_t k);

/// Fibonacci MUS closed form for from <= i <= to (from >= 6).
VerificationReport verify_fibonacci_mus(std::size_t from, std::size_t to);
/// Thue-Morse MUS closed form for from <= i <= to (from >= 5).
VerificationReport verify_tm_mus(std::size_t from, std::size_t to);
/// Net-occurrence closed forms and MUS/net duality on F_i (7..fib_max) and
/// tm_i (5..tm_max).
VerificationReport verify_net_closed_forms(std::size_t fib_max, std::size_t tm_max);

struct OccLemmaRanges {
  std::size_t fib_max = 20;  ///< occ(F_{i-d}, F_i) constancy, i <= fib_max
  std::size_t tm_max = 14;   ///< occ(tm_{i-d}, tm_i) constancy, i <= tm_max
  std::size_t lpp_max = 18;  ///< occ(F_k^<, F_i) = occ(F_k, F_i), k <= i <= lpp_max
};

/// Occurrence-count constancy for Fibonacci and Thue-Morse words and the
/// longest-proper-prefix equalities.  The tm_2-in-tm_5 count is reported as
/// measured.
VerificationReport verify_occ_lemmas(const OccLemmaRanges& ranges = {});

/// Occurrence preservation on Fibonacci/Thue-Morse instances up to
/// `max_order`, plus the four two-word fixtures (reported, not asserted).
VerificationReport verify_occ_preservation_suite(std::size_t max_order);

}  // namespace morphlab

#endif  // MORPHLAB_REPEATS_HPP
