#ifndef CVBENCH_PARALLEL_HPP
#define CVBENCH_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace cvbench {

// Number of worker threads used by parallel_for. Reads CVBENCH_THREADS once
// (positive integer); falls back to the hardware concurrency.
int thread_budget();

// Runs body(i) for i in [0, count) on a bounded worker pool. Each index
// writes only its own output slot, so results are deterministic regardless
// of scheduling. Calls nested inside a worker run serially.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

} // namespace cvbench

#endif
