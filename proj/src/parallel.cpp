// Copyright 2026 The MorphAlign Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "morphalign/parallel.hpp"

#include <omp.h>

#include <atomic>
#include <cstdlib>
#include <string>

namespace morphalign::parallel {
namespace {

std::atomic<int> g_limit{0};

int env_limit() {
  const char* v = std::getenv("MORPHALIGN_THREADS");
  if (v == nullptr || *v == '\0') return 0;
  try {
    const int n = std::stoi(v);
    return n > 0 ? n : 0;
  } catch (...) {
    return 0;
  }
}

}  // namespace

int thread_count() {
  int n = omp_get_num_procs();
  if (const int lim = g_limit.load(); lim > 0) n = lim;
  if (const int cap = env_limit(); cap > 0 && cap < n) n = cap;
  return n > 0 ? n : 1;
}

void set_thread_limit(int n) { g_limit.store(n > 0 ? n : 0); }

}  // namespace morphalign::parallel
