// SPDX-License-Identifier: Apache-2.0
#include "nfal/parallel.hpp"
#include "nfal/types.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace nfal {

namespace {
std::atomic<unsigned> g_workers{0};
}

void set_worker_count(unsigned n) { g_workers.store(n); }

unsigned worker_count()
{
    unsigned n = g_workers.load();
    if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
    return n;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body)
{
    if (n == 0) return;
    const std::size_t workers = std::min<std::size_t>(worker_count(), n);
    if (workers <= 1) {
        body(0, n);
        return;
    }

    std::exception_ptr err;
    std::mutex err_mutex;
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t b = w * chunk;
        const std::size_t e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&, b, e] {
            try {
                body(b, e);
            } catch (...) {
                std::lock_guard lock(err_mutex);
                if (!err) err = std::current_exception();
            }
        });
    }
    pool.clear(); // joins
    if (err) std::rethrow_exception(err);
}

void GridSpec::validate() const
{
    if (nx == 0 || ny == 0) throw InvalidArgument("grid shape must be positive");
    if (!(region.width() > 0.0) || !(region.height() > 0.0))
        throw InvalidArgument("grid region must have positive area");
}

const char* to_string(Axis a)
{
    switch (a) {
    case Axis::x: return "x";
    case Axis::y: return "y";
    case Axis::r: return "r";
    case Axis::theta: return "theta";
    case Axis::beam: return "beam";
    case Axis::cross: return "cross";
    }
    return "?";
}

} // namespace nfal
