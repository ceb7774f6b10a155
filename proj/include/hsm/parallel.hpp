#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace hsm {

// Process-wide worker count (set once by the CLI; defaults to 1).
void set_thread_count(int threads);
int thread_count();

// Chunked parallel map-reduce over [0, n): each of the fixed `threads` chunks
// accumulates its partial sum locally; partials are combined in chunk order,
// so the result is bit-identical for a fixed thread count.
double parallel_sum(std::size_t n, const std::function<double(std::size_t)>& term);

// Plain parallel loop with the same fixed chunking.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace hsm
