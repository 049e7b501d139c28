#pragma once

#include <cstddef>
#include <functional>

namespace heiskit {

// Process-wide default worker count (hardware concurrency at startup, >= 1).
unsigned default_workers();
void set_default_workers(unsigned n);

// Runs body(begin, end) over fixed-size chunks covering [0, n). Chunks are
// handed to threads through an atomic cursor, so which thread runs a chunk
// is unspecified, but every output slot written by index depends only on the
// index. Reductions that store per-chunk partials and merge them serially in
// chunk order are therefore independent of the worker count.
void parallel_for_chunks(std::size_t n, unsigned workers, std::size_t chunk,
                         const std::function<void(std::size_t, std::size_t)>& body);

// Convenience wrapper: body(i) per index, chunked internally.
void parallel_for(std::size_t n, unsigned workers,
                  const std::function<void(std::size_t)>& body);

// Neumaier-compensated serial sum, used for fixed-order merges of per-chunk
// partial results.
double compensated_sum(const double* v, std::size_t n);

}  // namespace heiskit
