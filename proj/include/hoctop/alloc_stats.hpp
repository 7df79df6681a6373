#pragma once

#include <cstddef>

namespace hoctop::alloc {

// Heap counters kept by the replacement operator new/delete in the
// benchmark library. Linking these functions pulls that allocator in.

std::size_t current_bytes() noexcept;
std::size_t peak_bytes() noexcept;

/// Sets the high-water mark to the current live byte count.
void reset_peak() noexcept;

}  // namespace hoctop::alloc
