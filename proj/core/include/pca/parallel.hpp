#pragma once

#include <cstddef>
#include <functional>

namespace pca {

// Worker count: PCA_THREADS if set and positive, else hardware concurrency.
std::size_t worker_count();

// Runs body(i) for i in [0, n) across worker_count() threads. Indices are
// handed out dynamically; body must only touch state owned by index i. The
// first exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace pca
