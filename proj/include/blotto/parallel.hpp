// Copyright 2026 The Blotto Solver Authors
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

#ifndef BLOTTO_PARALLEL_HPP_
#define BLOTTO_PARALLEL_HPP_

namespace blotto {

// Caps OpenMP worker threads for subsequent parallel regions; 0 leaves the
// runtime default in place.
void set_thread_limit(int threads);
int max_threads();

}  // namespace blotto

#endif  // BLOTTO_PARALLEL_HPP_
