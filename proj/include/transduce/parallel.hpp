// Copyright 2026 The Transduce Authors
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

#pragma once

#include <cstddef>
#include <functional>

namespace transduce {

// Worker threads available to the library: hardware concurrency capped by the
// TRANSDUCE_THREADS environment variable (values < 1 are ignored).
std::size_t worker_count();

// Calls body(i) for every i in [0, n). Work is split into contiguous blocks
// across worker_count() threads; callers write results into slot i so the
// assembly order never depends on scheduling. The first exception thrown by
// any body is rethrown on the calling thread. Nested calls from a worker run
// serially on that worker.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace transduce
