#ifndef FACTCERT_PARALLEL_HPP
#define FACTCERT_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace factcert {

// Runs fn(i) for every i in [0, count), statically chunked over at most
// `threads` workers. fn must be safe to call concurrently for distinct i.
// threads <= 1 runs inline.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace factcert

#endif
