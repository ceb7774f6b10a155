#include "hsm/parallel.hpp"

#include <atomic>
#include <thread>

namespace hsm {

namespace {
std::atomic<int> g_threads{1};
} // namespace

void set_thread_count(int threads) { g_threads = threads < 1 ? 1 : threads; }
int thread_count() { return g_threads; }

double parallel_sum(std::size_t n, const std::function<double(std::size_t)>& term) {
    const int nt = thread_count();
    if (nt == 1 || n < 64) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) acc += term(i);
        return acc;
    }
    std::vector<double> partial(nt, 0.0);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (int c = 0; c < nt; ++c) {
        pool.emplace_back([&, c]() {
            const std::size_t lo = n * c / nt, hi = n * (c + 1) / nt;
            double acc = 0.0;
            for (std::size_t i = lo; i < hi; ++i) acc += term(i);
            partial[c] = acc;
        });
    }
    for (auto& th : pool) th.join();
    double acc = 0.0;
    for (double p : partial) acc += p;  // fixed combine order
    return acc;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    const int nt = thread_count();
    if (nt == 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (int c = 0; c < nt; ++c) {
        pool.emplace_back([&, c]() {
            const std::size_t lo = n * c / nt, hi = n * (c + 1) / nt;
            for (std::size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace hsm
