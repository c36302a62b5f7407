#pragma once

// Batch execution of independent closure tasks.

#include <cstddef>
#include <functional>

namespace syzex {

/// Runs body(0), ..., body(n - 1). With `parallel` set and OpenMP available
/// the tasks are spread over threads; otherwise they run in order. The
/// exception of the lowest failing task index is rethrown after all tasks
/// have finished.
void run_tasks(std::size_t n, const std::function<void(std::size_t)>& body, bool parallel);

bool parallel_available();
int worker_count();

} // namespace syzex
