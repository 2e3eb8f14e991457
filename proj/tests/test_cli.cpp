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

// Runs the installed command-line binary and checks exit codes and output.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "machine_format.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = {}) {
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" MORPHLAB_CLI_PATH "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<morphlab::machine::Record> records(const std::string& out) {
  std::vector<morphlab::machine::Record> recs;
  std::istringstream in(out);
  for (std::string line; std::getline(in, line);) {
    auto r = morphlab::machine::parse(line);
    EXPECT_TRUE(r.has_value()) << line;
    if (r) recs.push_back(*r);
  }
  return recs;
}

}  // namespace

TEST(MachineFormat, RoundTrip) {
  using morphlab::machine::Record;
  const Record rec{"if", {{"x", ""}, {"text", "a b=c%d\n"}, {"k", "v"}}};
  const std::string line = morphlab::machine::format(rec);
  EXPECT_EQ(line.find('\n'), std::string::npos);
  const auto back = morphlab::machine::parse(line);
  ASSERT_TRUE(back);
  EXPECT_EQ(back->kind, "if");
  EXPECT_EQ(back->fields, rec.fields);
  EXPECT_FALSE(morphlab::machine::parse(""));
  EXPECT_FALSE(morphlab::machine::parse("kind=x"));
  EXPECT_FALSE(morphlab::machine::parse("record=x broken"));
  EXPECT_FALSE(morphlab::machine::parse("record=x k=%G1"));
  EXPECT_FALSE(morphlab::machine::parse("record=x k=%4"));
}

TEST(Cli, CheckIfExitCodes) {
  EXPECT_EQ(run("check-if -m fibonacci -w abaababa").code, 0);
  const auto r = run("check-if -m fibonacci -w abaab");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("NOT-IF", 0), 0u) << r.out;
  EXPECT_EQ(run("check-if -m fibonacci -w abc").code, 2);
  EXPECT_EQ(run("check-if -m 'a->' -w ab").code, 2);
  EXPECT_EQ(run("check-if -m 'a->a;b->aa' -w ab").code, 2);
  EXPECT_EQ(run("--allow-non-injective check-if -m 'a->a;b->aa' -w ab").code, 1);
  EXPECT_EQ(run("no-such-command").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST(Cli, MachineOutputEndsWithResult) {
  const auto r = run("--format machine check-if -m thue-morse -w abbabaab --barrier");
  EXPECT_EQ(r.code, 0);
  const auto recs = records(r.out);
  ASSERT_EQ(recs.size(), 3u);
  EXPECT_EQ(recs[0].kind, "if");
  EXPECT_EQ(*recs[0].get("decision"), "true");
  EXPECT_EQ(recs[1].kind, "barrier");
  EXPECT_EQ(*recs[1].get("left"), "ab");
  EXPECT_EQ(*recs[1].get("right"), "ab");
  EXPECT_EQ(recs[2].kind, "result");
  EXPECT_EQ(*recs[2].get("decision"), "true");
}

TEST(Cli, WordCommands) {
  EXPECT_EQ(run("gen -f fibonacci -n 6").out, "abaababa\n");
  EXPECT_EQ(run("apply -m thue-morse -w a -k 3").out, "abbabaab\n");
  EXPECT_EQ(run("occ -p aba -t abaababaabaab").out, "count=4 positions=1,4,6,9\n");
  EXPECT_EQ(run("mus -t abaababa").out, "[3,4] aa\n[5,7] bab\n");
  EXPECT_EQ(run("netocc -t abaababaabaab").out, "[1,6] abaaba\n[6,11] abaaba\n[9,13] abaab\n");
  EXPECT_EQ(run("gen").code, 2);
  const auto list = run("gen --list-morphisms");
  EXPECT_EQ(list.code, 0);
  EXPECT_EQ(list.out.rfind("fibonacci a->ab;b->a\n", 0), 0u) << list.out;
}

TEST(Cli, FileArguments) {
  const std::string path = testing::TempDir() + "morphlab_cli_word.txt";
  {
    std::ofstream f(path);
    f << "abaa\nbaba\n";
  }
  EXPECT_EQ(run("check-if -m fibonacci -w @" + path).code, 0);
  EXPECT_EQ(run("check-if -m fibonacci -w @/no/such/file").code, 2);
}

TEST(Cli, InjectivityAndFactorize) {
  const auto inj = run("--format machine check-injective -m 'a->ab;b->abab'");
  EXPECT_EQ(inj.code, 1);
  const auto recs = records(inj.out);
  ASSERT_FALSE(recs.empty());
  EXPECT_EQ(*recs[0].get("witness_u"), "aa");
  EXPECT_EQ(*recs[0].get("witness_v"), "b");

  EXPECT_EQ(run("factorize -m thue-morse -w baba -k circular").code, 0);
  EXPECT_EQ(run("factorize -m thue-morse -w abba -k interfered").code, 1);
  EXPECT_EQ(run("factorize -m 'a->a;b->aa' -w aaaaaaaaaaaa -k image", "MORPHLAB_BUDGET=64,5").code, 2);
  EXPECT_EQ(run("factorize -m 'a->a;b->aa' -w aaa -k image", "MORPHLAB_BUDGET=bogus").code, 2);
}

TEST(Cli, Verify) {
  const auto r = run("verify -s tm-mus --max-order 12");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("tm-mus: 8 passed, 0 failed"), std::string::npos) << r.out;
  EXPECT_EQ(run("verify -s no-closed-form --max-order 6").code, 2);
}
