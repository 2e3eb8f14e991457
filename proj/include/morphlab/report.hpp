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

#ifndef MORPHLAB_REPORT_HPP
#define MORPHLAB_REPORT_HPP

#include <algorithm>
#include <string>
#include <vector>

namespace morphlab {

/// Outcome of a verification sweep: one entry per checked instance, in the
/// order the instances were generated.
struct VerificationReport {
  struct Instance {
    std::string label;
    bool passed = false;
    std::string detail;
  };

  std::vector<Instance> instances;

  void add(std::string label, bool passed, std::string detail = {}) {
    instances.push_back({std::move(label), passed, std::move(detail)});
  }
  void append(const VerificationReport& other) {
    instances.insert(instances.end(), other.instances.begin(), other.instances.end());
  }
  bool passed() const {
    return std::all_of(instances.begin(), instances.end(), [](const Instance& i) { return i.passed; });
  }
};

}  // namespace morphlab

#endif  // MORPHLAB_REPORT_HPP
