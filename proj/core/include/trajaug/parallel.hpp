#pragma once

#include <cstddef>
#include <functional>

namespace trajaug {

/// Worker count to use when a caller passes 0.
unsigned default_workers();

/// Runs body(i) for every i in [0, count) on up to `workers` threads
/// (0 selects default_workers()). Tasks are claimed dynamically, so body
/// must write only to its own slot. The exception from the lowest failing
/// index is rethrown on the calling thread after all workers stop.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body);

}  // namespace trajaug
