// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Prints one verdict line per acceptance criterion; exits nonzero if any fails.

#include <iostream>

#include "tropdiag/acceptance.hpp"

int main() {
  bool all = true;
  for (const auto& r : tropdiag::acceptance::run_all()) {
    tropdiag::acceptance::print(std::cout, r);
    all = all && r.passed;
  }
  std::cout << (all ? "all criteria passed" : "some criteria failed") << "\n";
  return all ? 0 : 1;
}
