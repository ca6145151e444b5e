#ifndef ADVICE_SEARCH_PARALLEL_HPP
#define ADVICE_SEARCH_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace advice_search {

// Worker count: ADVICE_SEARCH_THREADS when set to a positive integer,
// otherwise the hardware concurrency (at least 1).
std::size_t worker_count();

// Calls task(i) for every i in [0, tasks) across the worker pool. Tasks must
// write only to their own slot of any shared output; callers merge results
// in index order so outputs do not depend on scheduling.
void parallel_for(std::size_t tasks, const std::function<void(std::size_t)>& task);

}  // namespace advice_search

#endif  // ADVICE_SEARCH_PARALLEL_HPP
