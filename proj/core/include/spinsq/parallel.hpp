// Copyright 2026 The spinsq Authors
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

#pragma once

#include <cstddef>
#include <functional>

namespace spinsq {

// Number of worker threads: the SPINSQ_THREADS environment variable when it
// parses as a positive integer, otherwise the hardware concurrency (at
// least 1). Read once per call so tests can change the variable.
int worker_count();

// Runs fn(i) for i in [0, count). Work is split across worker_count()
// threads; nested calls from inside a task run serially. Exceptions thrown
// by tasks are rethrown on the calling thread (one of them, if several).
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

// True if pred(i) holds for any i in [0, count). Workers stop scheduling
// new indices once a hit is found, so pred should be side-effect free.
bool parallel_any(std::size_t count, const std::function<bool(std::size_t)>& pred);

}  // namespace spinsq
