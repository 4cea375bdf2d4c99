#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace qdefect {

// Worker cap: QDEFECT_THREADS when set to a positive integer, else the hardware concurrency.
unsigned worker_count();

// Runs fn(task) for task in [0, tasks) on up to worker_count() threads.
template <class Fn>
void parallel_for(std::size_t tasks, Fn&& fn) {
  const std::size_t workers = std::min<std::size_t>(worker_count(), tasks);
  if (workers <= 1) {
    for (std::size_t t = 0; t < tasks; ++t) fn(t);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t t = next++; t < tasks; t = next++) fn(t);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace qdefect
