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

// Thread-count policy shared by all OpenMP kernels.

#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <vector>

namespace morphalign::parallel {

/// Worker count: the override installed by set_thread_limit(), else the
/// number of processors; capped by MORPHALIGN_THREADS. Always >= 1.
int thread_count();

/// 0 clears the override.
void set_thread_limit(int n);

/// Runs fn(i) for i in [0, n) on the pool and stores results by index, so
/// output order matches input order regardless of scheduling. The first
/// exception thrown by any iteration is rethrown after the loop.
template <typename T, typename Fn>
std::vector<T> map_ordered(std::size_t n, Fn&& fn) {
  std::vector<T> out(n);
  std::exception_ptr error;
  std::mutex error_mu;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 16) num_threads(thread_count())
  for (long long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mu);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace morphalign::parallel
