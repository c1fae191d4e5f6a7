#ifndef HP0_UTIL_HPP
#define HP0_UTIL_HPP

#include <functional>
#include <vector>

namespace hp0 {

/// Worker count: HP0_THREADS when set (>=1), else hardware concurrency.
int thread_count(int requested = 0);

/// Runs fn(i) for i in [0, count) on up to `threads` workers. Tasks must
/// write to disjoint state; exceptions are rethrown on the caller.
void parallel_for(int count, int threads, const std::function<void(int)>& fn);

}  // namespace hp0

#endif
