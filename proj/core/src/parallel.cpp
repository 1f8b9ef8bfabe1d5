#include "ptspec/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace ptspec {

namespace {
thread_local bool g_in_worker = false;
}

int thread_cap() {
  const char* env = std::getenv("PTSPEC_THREADS");
  long cap = 0;
  if (env != nullptr) {
    cap = std::strtol(env, nullptr, 10);
  }
  if (cap <= 0) {
    cap = static_cast<long>(std::thread::hardware_concurrency());
    if (cap <= 0) cap = 1;
  }
  return static_cast<int>(cap);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  const std::size_t workers =
      g_in_worker ? 1 : std::min<std::size_t>(thread_cap(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr error;
  std::atomic<bool> failed{false};

  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      g_in_worker = true;
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n || failed.load()) break;
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
          break;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace ptspec
