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

// morphlab command-line front end.  Talks to the library only through the
// C interface.
//
// Exit codes: 0 success / true / all passed, 1 false decision or failed
// verification, 2 usage, input or library errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "machine_format.hpp"
#include "morphlab/morphlab.h"

namespace {

constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LibraryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using ContextPtr = std::unique_ptr<morphlab_context, decltype(&morphlab_context_free)>;
using MorphismPtr = std::unique_ptr<morphlab_morphism, decltype(&morphlab_morphism_free)>;
using ReportPtr = std::unique_ptr<morphlab_report, decltype(&morphlab_report_free)>;

void check(morphlab_status status) {
  if (status != MORPHLAB_OK) {
    throw LibraryError(std::string(morphlab_status_name(status)) + ": " + morphlab_last_error());
  }
}

// `@path` reads the file, dropping all whitespace; anything else is literal.
std::string resolve(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw InputError("cannot read '" + arg.substr(1) + "'");
  std::string out;
  for (char c; in.get(c);) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

MorphismPtr load_morphism(const std::string& arg) {
  morphlab_morphism* m = nullptr;
  // Files may hold one rule per line; whitespace is insignificant.
  check(morphlab_morphism_parse(resolve(arg).c_str(), &m));
  return MorphismPtr(m, morphlab_morphism_free);
}

ContextPtr make_context(bool allow_non_injective, std::size_t barrier_length) {
  morphlab_context* ctx = nullptr;
  check(morphlab_context_create(&ctx));
  ContextPtr owned(ctx, morphlab_context_free);
  if (const char* budget = std::getenv("MORPHLAB_BUDGET"); budget && *budget) {
    check(morphlab_context_set_budget(ctx, budget));
  }
  check(morphlab_context_set_allow_non_injective(ctx, allow_non_injective ? 1 : 0));
  check(morphlab_context_set_barrier_length(ctx, barrier_length));
  return owned;
}

int emit(morphlab_status status, morphlab_report* const* slot, bool machine) {
  check(status);
  morphlab_report* raw = *slot;
  ReportPtr report(raw, morphlab_report_free);
  const std::size_t n = morphlab_report_record_count(raw);
  std::ostringstream out;
  for (std::size_t i = 0; i < n; ++i) {
    if (machine) {
      morphlab::machine::Record rec{morphlab_report_record_kind(raw, i), {}};
      for (std::size_t f = 0; f < morphlab_report_field_count(raw, i); ++f) {
        rec.fields.emplace_back(morphlab_report_field_key(raw, i, f), morphlab_report_field_value(raw, i, f));
      }
      out << morphlab::machine::format(rec) << '\n';
    } else {
      out << morphlab_report_record_text(raw, i) << '\n';
    }
  }
  const bool decision = morphlab_report_decision(raw) != 0;
  if (machine) {
    out << morphlab::machine::format({"result", {{"decision", decision ? "true" : "false"}}}) << '\n';
  }
  std::cout << out.str() << std::flush;
  return decision ? 0 : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"morphlab: word morphisms, interference-freeness, MUS and net occurrences"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "human";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "machine"}));
  bool allow_non_injective = false;
  app.add_flag("--allow-non-injective", allow_non_injective,
               "Run IF/recognizability checks on non-injective morphisms");

  std::string morphism, word, text, pattern, family, suite, kind;
  std::size_t order = 0, max_order = 12, power = 1, steps = 6, repeats = 5, from = 20, to = 25;
  std::size_t barrier_length = 8;
  bool barrier = false;

  auto add_morphism = [&](CLI::App* sub) {
    sub->add_option("-m,--morphism", morphism, "Morphism 'a->ab;b->a', a built-in name, or @file")->required();
  };
  auto add_word = [&](CLI::App* sub, const char* help) {
    sub->add_option("-w,--word", word, help)->required();
  };

  auto* check_if = app.add_subcommand("check-if", "Decide interference-freeness on {u}");
  add_morphism(check_if);
  add_word(check_if, "Source word u, or @file");
  check_if->add_flag("--barrier", barrier, "Also search a prefix/suffix barrier certificate");
  check_if->add_option("--barrier-length", barrier_length, "Longest barrier tried")->check(CLI::PositiveNumber);

  auto* strong = app.add_subcommand("check-strong-if", "Decide interference-freeness on all nonempty words");
  add_morphism(strong);

  auto* rec = app.add_subcommand("check-recognizable", "Decide recognizability on {u}");
  add_morphism(rec);
  add_word(rec, "Source word u, or @file");

  auto* inj = app.add_subcommand("check-injective", "Injectivity with a minimal witness");
  add_morphism(inj);

  auto* apply = app.add_subcommand("apply", "Apply a morphism k times");
  add_morphism(apply);
  add_word(apply, "Source word, or @file");
  apply->add_option("-k,--power", power, "Number of applications");

  auto* occ = app.add_subcommand("occ", "List occurrences of a pattern");
  occ->add_option("-p,--pattern", pattern, "Pattern, or @file")->required();
  occ->add_option("-t,--text", text, "Text, or @file")->required();

  auto* mus = app.add_subcommand("mus", "Minimal unique substrings");
  mus->add_option("-t,--text", text, "Text, or @file")->required();

  auto* net = app.add_subcommand("netocc", "Net occurrences");
  net->add_option("-t,--text", text, "Text, or @file")->required();

  auto* gen = app.add_subcommand("gen", "Generate a Fibonacci or Thue-Morse word");
  gen->add_option("-f,--family", family, "fibonacci, thue-morse or fibonacci-g")
      ->check(CLI::IsMember({"fibonacci", "thue-morse", "fibonacci-g"}));
  gen->add_option("-n,--order", order, "Order i");
  bool list_morphisms = false;
  gen->add_flag("--list-morphisms", list_morphisms, "Print the built-in morphisms instead");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("-s,--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"fibonacci-mus", "tm-mus", "occ-preserve", "no-closed-form", "occ-lemmas",
                             "if-parity", "structural"}));
  verify->add_option("--max-order", max_order, "Largest order checked");

  auto* bench = app.add_subcommand("bench", "Time the IF decision on growing inputs");
  bench->add_option("-m,--morphism", morphism, "Morphism (default fibonacci)");
  auto* bench_word = bench->add_option("-w,--word", word, "Seed word doubled --steps times");
  auto* bench_family =
      bench->add_option("-f,--family", family, "fibonacci or thue-morse")->check(CLI::IsMember({"fibonacci", "thue-morse"}));
  bench_word->excludes(bench_family);
  bench->add_option("--steps", steps, "Doublings of the seed word");
  bench->add_option("--from", from, "First family order");
  bench->add_option("--to", to, "Last family order");
  bench->add_option("--repeats", repeats, "Runs per size (median reported)")->check(CLI::PositiveNumber);

  auto* scan = app.add_subcommand("scan", "Dump S_i, P_pref and P_suf of a word over the image alphabet");
  add_morphism(scan);
  add_word(scan, "Word over the target alphabet, or @file");

  auto* fact = app.add_subcommand("factorize", "Enumerate factorizations (bounded by MORPHLAB_BUDGET)");
  add_morphism(fact);
  add_word(fact, "Word over the target alphabet, or @file");
  fact->add_option("-k,--kind", kind, "image, interfered or circular")
      ->required()
      ->check(CLI::IsMember({"image", "interfered", "circular"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  const bool machine = format == "machine";
  try {
    morphlab_report* r = nullptr;
    if (*gen && list_morphisms) {
      for (std::size_t i = 0; i < morphlab_named_morphism_count(); ++i) {
        if (machine) {
          std::cout << morphlab::machine::format({"morphism",
                                                  {{"name", morphlab_named_morphism_name(i)},
                                                   {"spec", morphlab_named_morphism_spec(i)}}})
                    << '\n';
        } else {
          std::cout << morphlab_named_morphism_name(i) << ' ' << morphlab_named_morphism_spec(i) << '\n';
        }
      }
      return 0;
    }
    if (*gen && (family.empty() || order == 0)) {
      throw InputError("gen needs --family and --order (or --list-morphisms)");
    }
    if (*occ) return emit(morphlab_occ(resolve(pattern).c_str(), resolve(text).c_str(), &r), &r, machine);
    if (*mus) return emit(morphlab_mus(resolve(text).c_str(), &r), &r, machine);
    if (*net) return emit(morphlab_netocc(resolve(text).c_str(), &r), &r, machine);
    if (*gen) return emit(morphlab_generate(family.c_str(), order, &r), &r, machine);

    auto ctx = make_context(allow_non_injective, barrier_length);
    if (*verify) return emit(morphlab_verify(ctx.get(), suite.c_str(), max_order, &r), &r, machine);

    if (*bench) {
      auto m = load_morphism(morphism.empty() ? "fibonacci" : morphism);
      if (!word.empty()) {
        return emit(morphlab_bench_doubling(m.get(), resolve(word).c_str(), steps, repeats, &r), &r, machine);
      }
      const std::string fam = family.empty() ? "fibonacci" : family;
      return emit(morphlab_bench_family(m.get(), fam.c_str(), from, to, repeats, &r), &r, machine);
    }

    auto m = load_morphism(morphism);
    if (*strong) return emit(morphlab_check_strong_if(ctx.get(), m.get(), &r), &r, machine);
    if (*inj) return emit(morphlab_describe(m.get(), &r), &r, machine);
    const std::string w = resolve(word);
    if (*check_if) return emit(morphlab_check_if(ctx.get(), m.get(), w.c_str(), barrier ? 1 : 0, &r), &r, machine);
    if (*rec) return emit(morphlab_check_recognizable(ctx.get(), m.get(), w.c_str(), &r), &r, machine);
    if (*apply) return emit(morphlab_apply(m.get(), w.c_str(), power, &r), &r, machine);
    if (*scan) return emit(morphlab_scan(m.get(), w.c_str(), &r), &r, machine);
    if (*fact) return emit(morphlab_factorize(ctx.get(), m.get(), w.c_str(), kind.c_str(), &r), &r, machine);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  std::cerr << app.help();
  return kExitError;
}
