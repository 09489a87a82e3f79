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

#include "spinsq/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace spinsq {

namespace {

thread_local bool in_parallel_region = false;

}  // namespace

int worker_count() {
  if (const char* env = std::getenv("SPINSQ_THREADS")) {
    try {
      std::size_t pos = 0;
      int value = std::stoi(env, &pos);
      if (pos == std::string(env).size() && value > 0) {
        return value;
      }
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  const int workers = in_parallel_region ? 1 : worker_count();
  if (workers == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      fn(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    in_parallel_region = true;
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count || failed.load()) {
        break;
      }
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) {
          error = std::current_exception();
        }
        failed.store(true);
        break;
      }
    }
  };
  std::vector<std::thread> pool;
  const int extra =
      static_cast<int>(std::min(static_cast<std::size_t>(workers), count)) - 1;
  pool.reserve(extra);
  for (int t = 0; t < extra; ++t) {
    pool.emplace_back(work);
  }
  {
    // The calling thread participates; mark it nested for the duration.
    bool saved = in_parallel_region;
    work();
    in_parallel_region = saved;
  }
  for (std::thread& t : pool) {
    t.join();
  }
  if (error) {
    std::rethrow_exception(error);
  }
}

bool parallel_any(std::size_t count, const std::function<bool(std::size_t)>& pred) {
  const int workers = in_parallel_region ? 1 : worker_count();
  if (workers == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      if (pred(i)) {
        return true;
      }
    }
    return false;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> hit{false};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    in_parallel_region = true;
    for (;;) {
      if (hit.load() || failed.load()) {
        break;
      }
      std::size_t i = next.fetch_add(1);
      if (i >= count) {
        break;
      }
      try {
        if (pred(i)) {
          hit.store(true);
          break;
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) {
          error = std::current_exception();
        }
        failed.store(true);
        break;
      }
    }
  };
  std::vector<std::thread> pool;
  const int extra =
      static_cast<int>(std::min(static_cast<std::size_t>(workers), count)) - 1;
  pool.reserve(extra);
  for (int t = 0; t < extra; ++t) {
    pool.emplace_back(work);
  }
  {
    bool saved = in_parallel_region;
    work();
    in_parallel_region = saved;
  }
  for (std::thread& t : pool) {
    t.join();
  }
  if (error) {
    std::rethrow_exception(error);
  }
  return hit.load();
}

}  // namespace spinsq
