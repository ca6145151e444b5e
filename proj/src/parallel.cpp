#include "advice_search/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace advice_search {

std::size_t worker_count() {
  if (const char* env = std::getenv("ADVICE_SEARCH_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) {
        return static_cast<std::size_t>(v);
      }
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t tasks, const std::function<void(std::size_t)>& task) {
  const std::size_t workers = std::min(worker_count(), tasks);
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks; ++i) {
      task(i);
    }
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks; i = next++) {
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) {
    pool.emplace_back(worker);
  }
  worker();
  for (auto& t : pool) {
    t.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
}

}  // namespace advice_search
