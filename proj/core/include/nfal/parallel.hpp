// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>

namespace nfal {

// Process-wide worker count for grid loops. 0 selects hardware concurrency.
// Every parallel loop in the library writes disjoint, per-index outputs, so
// results do not depend on this setting.
void set_worker_count(unsigned n);
unsigned worker_count();

// Calls body(begin, end) over a static partition of [0, n).
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

} // namespace nfal
