#pragma once

#include <cstddef>
#include <functional>

namespace keyrate {

// 0 means "use hardware concurrency".
std::size_t resolve_threads(std::size_t requested) noexcept;

// Splits [0, n) into contiguous chunks and runs body(begin, end) on up to
// `threads` worker threads. Exceptions from workers are rethrown.
void parallel_for(std::size_t n, std::size_t threads,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace keyrate
