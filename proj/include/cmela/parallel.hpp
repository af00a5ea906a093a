#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace cmela {

/// Calls fn(begin, end) on contiguous chunks of [0, n). Chunks are independent, so the
/// result of a pure per-index body does not depend on `workers`.
template <typename Fn>
void parallel_for(long n, int workers, Fn&& fn) {
  if (n <= 0) return;
  const long threads = std::clamp<long>(workers, 1, std::max<long>(1, n));
  if (threads == 1) {
    fn(0L, n);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  const long chunk = (n + threads - 1) / threads;
  for (long t = 0; t < threads; ++t) {
    const long begin = t * chunk;
    const long end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, t, begin, end] {
      try {
        fn(begin, end);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace cmela
