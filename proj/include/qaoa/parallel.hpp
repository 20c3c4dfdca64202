#pragma once

#include <cstddef>
#include <functional>

namespace qaoa {

// Worker count for statevector kernels. Chunk boundaries and reduction order
// are fixed by problem size alone, so results are identical for any setting.
void set_max_threads(int n);
int max_threads();

namespace detail {

// Runs fn(begin, end) over fixed-size chunks of [0, n).
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& fn);

// Sums fn(begin, end) over the same fixed chunks, combining partials in
// ascending chunk order.
double parallel_sum(std::size_t n,
                    const std::function<double(std::size_t, std::size_t)>& fn);

}  // namespace detail
}  // namespace qaoa
