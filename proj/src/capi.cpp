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

#include "morphlab/morphlab.h"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <new>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "morphlab/classic_words.hpp"
#include "morphlab/error.hpp"
#include "morphlab/factorization.hpp"
#include "morphlab/interference.hpp"
#include "morphlab/matcher.hpp"
#include "morphlab/morphism.hpp"
#include "morphlab/repeats.hpp"
#include "morphlab/words.hpp"

using namespace morphlab;

struct morphlab_context {
  OracleBudget budget;
  IfOptions if_options;
  std::size_t barrier_length = 8;
};

struct morphlab_morphism {
  Morphism phi;
  std::string text;
};

struct morphlab_report {
  struct Record {
    std::string kind;
    std::string text;
    std::vector<std::pair<std::string, std::string>> fields;
  };
  int decision = 1;
  std::vector<Record> records;

  Record& add(std::string kind) {
    records.push_back(Record{std::move(kind), {}, {}});
    return records.back();
  }
};

namespace {

using Record = morphlab_report::Record;

thread_local std::string g_last_error;

morphlab_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return MORPHLAB_E_PARSE;
    case ErrorCode::kAlphabetMismatch: return MORPHLAB_E_ALPHABET_MISMATCH;
    case ErrorCode::kInvalidArgument: return MORPHLAB_E_INVALID_ARGUMENT;
    case ErrorCode::kEmptyWord: return MORPHLAB_E_EMPTY_WORD;
    case ErrorCode::kErasingImage: return MORPHLAB_E_ERASING_IMAGE;
    case ErrorCode::kNotInjective: return MORPHLAB_E_NOT_INJECTIVE;
    case ErrorCode::kNotEndomorphism: return MORPHLAB_E_NOT_ENDOMORPHISM;
    case ErrorCode::kOutOfRange: return MORPHLAB_E_OUT_OF_RANGE;
    case ErrorCode::kBudgetExceeded: return MORPHLAB_E_BUDGET_EXCEEDED;
    case ErrorCode::kIo: return MORPHLAB_E_IO;
  }
  return MORPHLAB_E_INTERNAL;
}

template <typename Fn>
morphlab_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return MORPHLAB_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return MORPHLAB_E_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MORPHLAB_E_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw Error(ErrorCode::kInvalidArgument, std::string(what) + " is null");
}

// Runs `fill` on a fresh report and hands it out only on success.
template <typename Fn>
morphlab_status with_report(morphlab_report** out, Fn&& fill) {
  return guarded([&] {
    require(out, "output pointer");
    *out = nullptr;
    auto report = std::make_unique<morphlab_report>();
    fill(*report);
    *out = report.release();
  });
}

std::string show(const Word& w) { return w.empty() ? "." : w.str(); }

std::string symbols_of(const AlphabetPtr& alphabet, std::span<const Symbol> s) {
  std::string out;
  for (Symbol c : s) out.push_back(alphabet->symbol(c));
  return out;
}

const char* boolean(bool b) { return b ? "true" : "false"; }

void field(Record& r, std::string key, std::string value) {
  r.fields.emplace_back(std::move(key), std::move(value));
}

void witness_fields(Record& r, const Morphism& phi, const InterferenceWitness& witness) {
  if (const auto* f = std::get_if<InterferedFactorization>(&witness)) {
    const auto& src = phi.source();
    const Word y = f->y(phi);
    field(r, "kind", "interfered");
    field(r, "x", f->x.str());
    field(r, "y", y.str());
    field(r, "y_images", symbols_of(src, f->y_images));
    field(r, "z", f->z.str());
    field(r, "donor_x", f->donor_x ? std::string(1, src->symbol(*f->donor_x)) : "");
    field(r, "donor_z", f->donor_z ? std::string(1, src->symbol(*f->donor_z)) : "");
    r.text += " x=" + show(f->x) + " y=" + show(y) + " z=" + show(f->z);
  } else {
    const auto& inner = std::get<InnerImageFactor>(witness);
    const std::string host(1, phi.source()->symbol(inner.host));
    field(r, "kind", "inner");
    field(r, "host", host);
    field(r, "offset", std::to_string(inner.offset));
    r.text += " inner host=" + host + " offset=" + std::to_string(inner.offset);
  }
}

Word source_word(const Morphism& phi, const char* text) {
  require(text, "word");
  return Word::parse(phi.source(), text);
}

Word free_word(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::kEmptyWord, "empty text");
  return Word::parse(Alphabet::of(text), text);
}

Word family_word(std::string_view family, std::size_t order) {
  if (family == "fibonacci") return fibonacci_word(order);
  if (family == "thue-morse") return thue_morse_word(order);
  if (family == "fibonacci-g") return fibonacci_G(order);
  throw Error(ErrorCode::kInvalidArgument, "unknown family '" + std::string(family) + "'");
}

void add_verification(morphlab_report& report, std::string_view suite, const VerificationReport& v) {
  std::size_t failed = 0;
  for (const auto& inst : v.instances) {
    Record& r = report.add("instance");
    field(r, "suite", std::string(suite));
    field(r, "label", inst.label);
    field(r, "status", inst.passed ? "PASS" : "FAIL");
    field(r, "detail", inst.detail);
    r.text = std::string(inst.passed ? "PASS " : "FAIL ") + inst.label;
    if (!inst.detail.empty()) r.text += "  (" + inst.detail + ")";
    if (!inst.passed) ++failed;
  }
  Record& s = report.add("summary");
  field(s, "suite", std::string(suite));
  field(s, "total", std::to_string(v.instances.size()));
  field(s, "passed", std::to_string(v.instances.size() - failed));
  field(s, "failed", std::to_string(failed));
  s.text = std::string(suite) + ": " + std::to_string(v.instances.size() - failed) + " passed, " +
           std::to_string(failed) + " failed";
  report.decision = failed == 0 ? 1 : 0;
}

VerificationReport run_suite(std::string_view suite, std::size_t n) {
  const std::size_t tm_n = std::min(n, kThueMorseOrderCap);
  if (suite == "fibonacci-mus") return verify_fibonacci_mus(6, n);
  if (suite == "tm-mus") return verify_tm_mus(5, tm_n);
  if (suite == "occ-preserve") return verify_occ_preservation_suite(n);
  if (suite == "no-closed-form") {
    if (n < 7) throw Error(ErrorCode::kOutOfRange, "no-closed-form needs max order >= 7");
    return verify_net_closed_forms(n, tm_n);
  }
  if (suite == "occ-lemmas") {
    if (n < 6) throw Error(ErrorCode::kOutOfRange, "occ-lemmas needs max order >= 6");
    return verify_occ_lemmas(OccLemmaRanges{n, tm_n, n});
  }
  if (suite == "if-parity") return verify_if_parity(n, tm_n);
  if (suite == "structural") return structural_checks(n);
  throw Error(ErrorCode::kInvalidArgument, "unknown suite '" + std::string(suite) + "'");
}

double median_seconds(const InterferenceChecker& checker, const Word& u, std::size_t repeats, bool& verdict) {
  std::vector<double> times;
  for (std::size_t r = 0; r < std::max<std::size_t>(repeats, 1); ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    verdict = checker.check(u).interference_free;
    const auto t1 = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration<double>(t1 - t0).count());
  }
  std::nth_element(times.begin(), times.begin() + static_cast<std::ptrdiff_t>(times.size() / 2), times.end());
  return times[times.size() / 2];
}

constexpr double kBenchRatioLimit = 3.0;

void add_bench(morphlab_report& report, const InterferenceChecker& checker, const std::string& label,
               const Word& u, std::size_t repeats, double& previous) {
  bool verdict = false;
  const double seconds = median_seconds(checker, u, repeats, verdict);
  Record& r = report.add("bench");
  field(r, "input", label);
  field(r, "source_length", std::to_string(u.size()));
  std::size_t image = 0;
  for (Symbol c : u.symbols()) image += checker.morphism().image(c).size();
  field(r, "image_length", std::to_string(image));
  field(r, "if", boolean(verdict));
  field(r, "seconds", std::to_string(seconds));
  r.text = label + " |u|=" + std::to_string(u.size()) + " |phi(u)|=" + std::to_string(image) +
           " seconds=" + std::to_string(seconds);
  if (previous > 0) {
    const double ratio = seconds / previous;
    field(r, "ratio", std::to_string(ratio));
    r.text += " ratio=" + std::to_string(ratio);
    if (ratio >= kBenchRatioLimit) report.decision = 0;
  }
  previous = seconds;
}

}  // namespace

extern "C" {

const char* morphlab_version(void) { return "1.0.0"; }

const char* morphlab_status_name(morphlab_status status) {
  switch (status) {
    case MORPHLAB_OK: return "ok";
    case MORPHLAB_E_PARSE: return "parse";
    case MORPHLAB_E_ALPHABET_MISMATCH: return "alphabet-mismatch";
    case MORPHLAB_E_INVALID_ARGUMENT: return "invalid-argument";
    case MORPHLAB_E_EMPTY_WORD: return "empty-word";
    case MORPHLAB_E_ERASING_IMAGE: return "erasing-image";
    case MORPHLAB_E_NOT_INJECTIVE: return "not-injective";
    case MORPHLAB_E_NOT_ENDOMORPHISM: return "not-endomorphism";
    case MORPHLAB_E_OUT_OF_RANGE: return "out-of-range";
    case MORPHLAB_E_BUDGET_EXCEEDED: return "budget-exceeded";
    case MORPHLAB_E_IO: return "io";
    case MORPHLAB_E_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* morphlab_last_error(void) { return g_last_error.c_str(); }

morphlab_status morphlab_context_create(morphlab_context** out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = new morphlab_context();
  });
}

void morphlab_context_free(morphlab_context* ctx) { delete ctx; }

morphlab_status morphlab_context_set_budget(morphlab_context* ctx, const char* budget) {
  return guarded([&] {
    require(ctx, "context");
    require(budget, "budget");
    ctx->budget = OracleBudget::parse(budget);
  });
}

morphlab_status morphlab_context_set_allow_non_injective(morphlab_context* ctx, int allow) {
  return guarded([&] {
    require(ctx, "context");
    ctx->if_options.allow_non_injective = allow != 0;
  });
}

morphlab_status morphlab_context_set_barrier_length(morphlab_context* ctx, size_t max_length) {
  return guarded([&] {
    require(ctx, "context");
    if (max_length == 0) throw Error(ErrorCode::kInvalidArgument, "barrier length must be positive");
    ctx->barrier_length = max_length;
  });
}

morphlab_status morphlab_morphism_parse(const char* spec, morphlab_morphism** out) {
  return guarded([&] {
    require(spec, "morphism spec");
    require(out, "output pointer");
    *out = nullptr;
    const std::string_view text(spec);
    Morphism phi = text.find("->") == std::string_view::npos ? named_morphism(text) : Morphism::parse(text);
    std::string canonical = phi.to_string();
    *out = new morphlab_morphism{std::move(phi), std::move(canonical)};
  });
}

void morphlab_morphism_free(morphlab_morphism* m) { delete m; }

const char* morphlab_morphism_string(const morphlab_morphism* m) { return m ? m->text.c_str() : ""; }

size_t morphlab_named_morphism_count(void) { return named_morphisms().size(); }

const char* morphlab_named_morphism_name(size_t index) {
  const auto& all = named_morphisms();
  return index < all.size() ? all[index].name.c_str() : nullptr;
}

const char* morphlab_named_morphism_spec(size_t index) {
  static const std::vector<std::string> specs = [] {
    std::vector<std::string> s;
    for (const auto& nm : named_morphisms()) s.push_back(nm.morphism.to_string());
    return s;
  }();
  return index < specs.size() ? specs[index].c_str() : nullptr;
}

morphlab_status morphlab_describe(const morphlab_morphism* m, morphlab_report** out) {
  return with_report(out, [&](morphlab_report& report) {
    require(m, "morphism");
    const Morphism& phi = m->phi;
    const auto& inj = phi.injectivity();
    Record& r = report.add("morphism");
    field(r, "spec", m->text);
    field(r, "injective", boolean(inj.injective));
    field(r, "non_erasing", boolean(phi.is_non_erasing()));
    field(r, "uniform", phi.uniform_length() ? std::to_string(*phi.uniform_length()) : "no");
    field(r, "endomorphism", boolean(phi.is_endomorphism()));
    field(r, "total_length", std::to_string(phi.total_length()));
    r.text = m->text + (inj.injective ? " injective" : " not injective");
    if (inj.witness) {
      field(r, "witness_u", inj.witness->u.str());
      field(r, "witness_v", inj.witness->v.str());
      r.text += " u=" + show(inj.witness->u) + " v=" + show(inj.witness->v);
    }
    report.decision = inj.injective ? 1 : 0;
  });
}

morphlab_status morphlab_check_if(const morphlab_context* ctx, const morphlab_morphism* m, const char* u,
                                  int with_barrier, morphlab_report** out) {
  return with_report(out, [&](morphlab_report& report) {
    require(ctx, "context");
    require(m, "morphism");
    const Word word = source_word(m->phi, u);
    const auto d = is_interference_free_on(m->phi, word, ctx->if_options);
    Record& r = report.add("if");
    field(r, "morphism", m->text);
    field(r, "word", word.str());
    field(r, "decision", boolean(d.interference_free));
    field(r, "precondition_violated", boolean(d.precondition_violated));
    r.text = d.interference_free ? "IF" : "NOT-IF";
    if (d.witness) witness_fields(r, m->phi, *d.witness);
    if (d.precondition_violated) r.text += " (morphism not injective)";
    report.decision = d.interference_free ? 1 : 0;
    if (with_barrier) {
      if (auto cert = barrier_certificate(m->phi, word, ctx->barrier_length, ctx->if_options)) {
        Record& b = report.add("barrier");
        field(b, "left", cert->left.str());
        field(b, "right", cert->right.str());
        b.text = "barrier left=" + show(cert->left) + " right=" + show(cert->right);
      }
    }
  });
}

morphlab_status morphlab_check_strong_if(const morphlab_context* ctx, const morphlab_morphism* m,
                                         morphlab_report** out) {
  return with_report(out, [&](morphlab_report& report) {
    require(ctx, "context");
    require(m, "morphism");
    const auto d = is_strongly_interference_free(m->phi, ctx->if_options);
    Record& r = report.add("strong-if");
    field(r, "morphism", m->text);
    field(r, "decision", boolean(d.strongly_interference_free));
    field(r, "precondition_violated", boolean(d.precondition_violated));
    r.text = d.strongly_interference_free ? "STRONG-IF" : "NOT-STRONG-IF";
    if (d.failing_symbol) {
      const std::string c(1, m->phi.source()->symbol(*d.failing_symbol));
      field(r, "failing_symbol", c);
      r.text += " symbol=" + c;
    }
    if (d.witness) witness_fields(r, m->phi, *d.witness);
    report.decision = d.strongly_interference_free ? 1 : 0;
  });
}

morphlab_status morphlab_check_recognizable(const morphlab_context* ctx, const morphlab_morphism* m,
                                            const char* u, morphlab_report** out) {
  return with_report(out, [&](morphlab_report& report) {
    require(ctx, "context");
    require(m, "morphism");
    const Word word = source_word(m->phi, u);
    const auto d = is_recognizable_on(m->phi, word, ctx->if_options);
    Record& r = report.add("recognizable");
    field(r, "morphism", m->text);
    field(r, "word", word.str());
    field(r, "decision", boolean(d.recognizable));
    field(r, "precondition_violated", boolean(d.precondition_violated));
    r.text = d.recognizable ? "RECOGNIZABLE" : "NOT-RECOGNIZABLE";
    if (d.rotation) {
      field(r, "rotation", d.rotation->str());
      field(r, "count", std::to_string(d.count));
      r.text += " rotation=" + d.rotation->str() + " count=" + std::to_string(d.count);
    }
    report.decision = d.recognizable ? 1 : 0;
  });
}

morphlab_status morphlab_apply(const morphlab_morphism* m, const char* u, size_t k, morphlab_report** out) {
  return with_report(out, [&](morphlab_report& report) {
    require(m, "morphism");
    const Word image = iterate(m->phi, source_word(m->phi, u), k);
    Record& r = report.add("apply");
    field(r, "k", std::to_string(k));
    field(r, "length", std::to_string(image.size()));
    field(r, "image", image.str());
    r.text = image.str();
  });
}

morphlab_status morphlab_occ(const char* pattern, const char* text, morphlab_report** out) {
  return with_report(out, [&](morphlab_report& report) {
    require(pattern, "pattern");
    require(text, "text");
    const std::string all = std::string(pattern) + text;
    if (all.empty()) throw Error(ErrorCode::kEmptyWord, "empty pattern and text");
    const auto alphabet = Alphabet::of(all);
    const auto occ = occurrences(Word::parse(alphabet, pattern), Word::parse(alphabet, text));
    Record& r = report.add("occ");
    field(r, "count", std::to_string(occ.count()));
    field(r, "positions", occ.to_string());
    r.text = "count=" + std::to_string(occ.count()) + " positions=" + occ.to_string();
  });
}

morphlab_status morphlab_mus(const char* text, morphlab_report** out) {
  return with_report(out, [&](morphlab_report& report) {
    require(text, "text");
    for (const auto& m : compute_mus(free_word(text))) {
      Record& r = report.add("mus");
      field(r, "start", std::to_string(m.start));
      field(r, "end", std::to_string(m.end));
      field(r, "content", m.content.str());
      r.text = "[" + std::to_string(m.start) + "," + std::to_string(m.end) + "] " + m.content.str();
    }
  });
}

morphlab_status morphlab_netocc(const char* text, morphlab_report** out) {
  return with_report(out, [&](morphlab_report& report) {
    require(text, "text");
    const Word w = free_word(text);
    for (const auto& n : compute_net_occurrences(w)) {
      const std::string content = w.slice(n.start, n.end).str();
      Record& r = report.add("net");
      field(r, "start", std::to_string(n.start));
      field(r, "end", std::to_string(n.end));
      field(r, "content", content);
      r.text = "[" + std::to_string(n.start) + "," + std::to_string(n.end) + "] " + content;
    }
  });
}

morphlab_status morphlab_generate(const char* family, size_t order, morphlab_report** out) {
  return with_report(out, [&](morphlab_report& report) {
    require(family, "family");
    const Word w = family_word(family, order);
    Record& r = report.add("word");
    field(r, "family", family);
    field(r, "order", std::to_string(order));
    field(r, "length", std::to_string(w.size()));
    field(r, "word", w.str());
    r.text = w.str();
  });
}

morphlab_status morphlab_verify(const morphlab_context* ctx, const char* suite, size_t max_order,
                                morphlab_report** out) {
  return with_report(out, [&](morphlab_report& report) {
    require(ctx, "context");
    require(suite, "suite");
    add_verification(report, suite, run_suite(suite, max_order));
  });
}

morphlab_status morphlab_bench_doubling(const morphlab_morphism* m, const char* u, size_t steps, size_t repeats,
                                        morphlab_report** out) {
  return with_report(out, [&](morphlab_report& report) {
    require(m, "morphism");
    const InterferenceChecker checker(m->phi);
    Word word = source_word(m->phi, u);
    if (word.empty()) throw Error(ErrorCode::kEmptyWord, "bench needs a nonempty word");
    double previous = 0;
    for (std::size_t j = 0; j <= steps; ++j) {
      add_bench(report, checker, "u*2^" + std::to_string(j), word, repeats, previous);
      if (j < steps) word += Word(word);
    }
  });
}

morphlab_status morphlab_bench_family(const morphlab_morphism* m, const char* family, size_t from, size_t to,
                                      size_t repeats, morphlab_report** out) {
  return with_report(out, [&](morphlab_report& report) {
    require(m, "morphism");
    require(family, "family");
    if (from == 0 || to < from) throw Error(ErrorCode::kInvalidArgument, "bench range must be nonempty");
    const InterferenceChecker checker(m->phi);
    double previous = 0;
    for (std::size_t i = from; i <= to; ++i) {
      Word w = family_word(family, i);
      if (!same_alphabet(w.alphabet(), m->phi.source())) w = Word::parse(m->phi.source(), w.str());
      add_bench(report, checker, std::string(family) + "_" + std::to_string(i), w, repeats, previous);
    }
  });
}

morphlab_status morphlab_scan(const morphlab_morphism* m, const char* w, morphlab_report** out) {
  return with_report(out, [&](morphlab_report& report) {
    require(m, "morphism");
    require(w, "word");
    const Word word = Word::parse(m->phi.target(), w);
    const auto s = scan(m->phi, word);
    auto list = [](const std::vector<std::size_t>& v) {
      std::string out;
      for (std::size_t p : v) out += (out.empty() ? "" : ",") + std::to_string(p);
      return out;
    };
    Record& r = report.add("scan");
    field(r, "length", std::to_string(s.length));
    field(r, "occ_total", std::to_string(s.occ_total));
    field(r, "p_pref", list(s.proper_suffix_prefixes));
    field(r, "p_suf", list(s.proper_prefix_suffixes));
    r.text = "n=" + std::to_string(s.length) + " occ=" + std::to_string(s.occ_total) + " P_pref={" +
             list(s.proper_suffix_prefixes) + "} P_suf={" + list(s.proper_prefix_suffixes) + "}";
    for (const auto& [pos, syms] : s.starts) {
      const std::string names = symbols_of(m->phi.source(), syms);
      Record& st = report.add("start");
      field(st, "position", std::to_string(pos));
      field(st, "symbols", names);
      st.text = "S_" + std::to_string(pos) + "=" + names;
    }
  });
}

morphlab_status morphlab_factorize(const morphlab_context* ctx, const morphlab_morphism* m, const char* w,
                                   const char* kind, morphlab_report** out) {
  return with_report(out, [&](morphlab_report& report) {
    require(ctx, "context");
    require(m, "morphism");
    require(w, "word");
    require(kind, "kind");
    const Morphism& phi = m->phi;
    const auto& src = phi.source();
    const Word word = Word::parse(phi.target(), w);
    const std::string_view k(kind);
    std::size_t count = 0;
    auto pieces = [&](std::span<const Symbol> images) {
      std::string s;
      for (Symbol c : images) s += (s.empty() ? "" : "|") + phi.image(c).str();
      return s;
    };
    if (k == "image") {
      for (const auto& f : enumerate_image_factorizations(phi, word, ctx->budget)) {
        Record& r = report.add("factorization");
        field(r, "images", symbols_of(src, f));
        field(r, "pieces", pieces(f));
        r.text = pieces(f) + "  (" + symbols_of(src, f) + ")";
        ++count;
      }
    } else if (k == "interfered") {
      for (const auto& f : enumerate_interfered_factorizations(phi, word, ctx->budget)) {
        Record& r = report.add("interfered");
        witness_fields(r, phi, InterferenceWitness{f});
        r.text.erase(0, 1);
        ++count;
      }
    } else if (k == "circular") {
      for (const auto& f : enumerate_circular_factorizations(phi, word, ctx->budget)) {
        Record& r = report.add("circular");
        field(r, "q", f.q.str());
        field(r, "r_images", symbols_of(src, f.r_images));
        field(r, "p", f.p.str());
        field(r, "split", std::string(1, src->symbol(f.split_symbol)));
        r.text = "q=" + show(f.q) + " r=" + (f.r_images.empty() ? "." : pieces(f.r_images)) + " p=" + show(f.p) +
                 " split=" + src->symbol(f.split_symbol);
        ++count;
      }
    } else {
      throw Error(ErrorCode::kInvalidArgument, "unknown factorization kind '" + std::string(k) + "'");
    }
    Record& s = report.add("count");
    field(s, "kind", std::string(k));
    field(s, "count", std::to_string(count));
    s.text = std::to_string(count) + " " + std::string(k) + " factorization(s)";
    report.decision = count > 0 ? 1 : 0;
  });
}

void morphlab_report_free(morphlab_report* r) { delete r; }

int morphlab_report_decision(const morphlab_report* r) { return r ? r->decision : 0; }

size_t morphlab_report_record_count(const morphlab_report* r) { return r ? r->records.size() : 0; }

const char* morphlab_report_record_kind(const morphlab_report* r, size_t record) {
  return r && record < r->records.size() ? r->records[record].kind.c_str() : nullptr;
}

const char* morphlab_report_record_text(const morphlab_report* r, size_t record) {
  return r && record < r->records.size() ? r->records[record].text.c_str() : nullptr;
}

size_t morphlab_report_field_count(const morphlab_report* r, size_t record) {
  return r && record < r->records.size() ? r->records[record].fields.size() : 0;
}

const char* morphlab_report_field_key(const morphlab_report* r, size_t record, size_t field_index) {
  if (!r || record >= r->records.size() || field_index >= r->records[record].fields.size()) return nullptr;
  return r->records[record].fields[field_index].first.c_str();
}

const char* morphlab_report_field_value(const morphlab_report* r, size_t record, size_t field_index) {
  if (!r || record >= r->records.size() || field_index >= r->records[record].fields.size()) return nullptr;
  return r->records[record].fields[field_index].second.c_str();
}

const char* morphlab_report_field(const morphlab_report* r, size_t record, const char* key) {
  if (!r || !key || record >= r->records.size()) return nullptr;
  for (const auto& [k, v] : r->records[record].fields) {
    if (k == key) return v.c_str();
  }
  return nullptr;
}

}  // extern "C"
