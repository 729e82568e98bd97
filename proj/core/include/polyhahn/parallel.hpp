#pragma once

#include <cstddef>
#include <functional>

namespace polyhahn {

/// Worker count: hardware concurrency, capped by POLYHAHN_THREADS when set.
std::size_t worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. The first
/// exception thrown by any task is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace polyhahn
