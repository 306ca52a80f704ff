#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace exmoves {

// Runs fn(i) for i in [0, count) on up to `workers` threads. Work items must
// be independent and write only to their own output slots; the caller performs
// any reduction sequentially afterwards, so results are identical for every
// worker count.
template <typename Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn) {
    if (count == 0)
        return;
    if (workers < 1)
        workers = 1;
    const std::size_t nthreads =
        std::min<std::size_t>(static_cast<std::size_t>(workers), count);
    if (nthreads == 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};

    auto body = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count || failed.load())
                return;
            try {
                fn(i);
            } catch (...) {
                if (!failed.exchange(true))
                    error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t k = 0; k < nthreads; ++k)
        pool.emplace_back(body);
    for (auto& th : pool)
        th.join();
    if (failed.load() && error)
        std::rethrow_exception(error);
}

} // namespace exmoves
