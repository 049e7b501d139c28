#include "heiskit/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

namespace heiskit {

namespace {
unsigned g_default_workers = std::max(1u, std::thread::hardware_concurrency());
}

unsigned default_workers() { return g_default_workers; }

void set_default_workers(unsigned n) { g_default_workers = std::max(1u, n); }

void parallel_for_chunks(std::size_t n, unsigned workers, std::size_t chunk,
                         const std::function<void(std::size_t, std::size_t)>& body) {
  if (n == 0) return;
  if (chunk == 0) chunk = 1;
  if (workers == 0) workers = g_default_workers;
  const std::size_t chunks = (n + chunk - 1) / chunk;
  const unsigned threads = static_cast<unsigned>(
      std::min<std::size_t>(workers, chunks));

  if (threads <= 1) {
    for (std::size_t begin = 0; begin < n; begin += chunk) {
      body(begin, std::min(begin + chunk, n));
    }
    return;
  }

  std::atomic<std::size_t> cursor{0};
  auto run = [&] {
    for (;;) {
      const std::size_t begin = cursor.fetch_add(chunk, std::memory_order_relaxed);
      if (begin >= n) break;
      body(begin, std::min(begin + chunk, n));
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(threads - 1);
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
}

void parallel_for(std::size_t n, unsigned workers,
                  const std::function<void(std::size_t)>& body) {
  parallel_for_chunks(n, workers, 64, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) body(i);
  });
}

double compensated_sum(const double* v, std::size_t n) {
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = sum + v[i];
    if (std::fabs(sum) >= std::fabs(v[i])) {
      comp += (sum - t) + v[i];
    } else {
      comp += (v[i] - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

}  // namespace heiskit
