// Copyright 2026 The twjac Authors.
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

#ifndef TWJAC_PARALLEL_HPP_
#define TWJAC_PARALLEL_HPP_

#include <omp.h>

namespace twjac {

// Kernels come in two flavours: an OpenMP version and the serial reference
// it is tested against. Both produce identical results.
enum class Exec { kSerial, kParallel };

inline int worker_count() { return omp_get_max_threads(); }
inline void set_worker_count(int n) {
  if (n > 0) omp_set_num_threads(n);
}

}  // namespace twjac

#endif  // TWJAC_PARALLEL_HPP_
