// Copyright 2026 The cyberins Authors
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

#include "cyberins/common.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cyberins {

std::string_view RegimeName(Regime regime) {
  switch (regime) {
    case Regime::kSharing:
      return "sharing";
    case Regime::kNonSharing:
      return "nonsharing";
  }
  return "unknown";
}

Regime ParseRegime(std::string_view name) {
  if (name == "sharing") return Regime::kSharing;
  if (name == "nonsharing" || name == "non-sharing") return Regime::kNonSharing;
  throw DomainError("unknown regime '" + std::string(name) + "'");
}

bool NearlyEqual(double x, double y, double rel_tol) {
  const double scale = std::max({std::abs(x), std::abs(y), 1.0});
  return std::abs(x - y) <= rel_tol * scale;
}

int DefaultThreadCount() {
  static const int count = [] {
    if (const char* env = std::getenv("CYBERINS_THREADS")) {
      const int parsed = std::atoi(env);
      if (parsed > 0) return parsed;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
  }();
  return count;
}

void ParallelFor(std::size_t n, const std::function<void(std::size_t)>& body,
                 int threads) {
  if (threads <= 0) threads = DefaultThreadCount();
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(threads), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace cyberins
