#include "ds/parallel.hpp"

#include <atomic>
#include <cstdlib>

namespace ds {

namespace {
std::atomic<int> g_workers{-1};

int init_from_env() {
    const char* s = std::getenv("DS_WORKERS");
    if (!s) return 0;
    int v = std::atoi(s);
    return v >= 0 ? v : 0;
}
} // namespace

int worker_count() {
    int w = g_workers.load(std::memory_order_relaxed);
    if (w < 0) {
        w = init_from_env();
        g_workers.store(w, std::memory_order_relaxed);
    }
    return w;
}

void set_worker_count(int w) { g_workers.store(w < 0 ? 0 : w, std::memory_order_relaxed); }

} // namespace ds
