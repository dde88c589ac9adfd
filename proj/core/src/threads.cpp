#include "grainforge/threads.hpp"

#include <cstdlib>
#include <thread>
#include <vector>

namespace grainforge {

unsigned thread_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("GRAINFORGE_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && (unsigned long)v < hw) hw = unsigned(v);
    }
    return hw;
}

void parallel_blocks(std::size_t n,
                     const std::function<void(unsigned, std::size_t, std::size_t)>& fn) {
    unsigned nt = thread_count();
    if (nt <= 1 || n < 2) {
        fn(0, 0, n);
        return;
    }
    if (std::size_t(nt) > n) nt = unsigned(n);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    std::size_t chunk = n / nt, rem = n % nt, begin = 0;
    for (unsigned b = 0; b < nt; ++b) {
        std::size_t len = chunk + (b < rem ? 1 : 0);
        pool.emplace_back(fn, b, begin, begin + len);
        begin += len;
    }
    for (auto& t : pool) t.join();
}

}  // namespace grainforge
