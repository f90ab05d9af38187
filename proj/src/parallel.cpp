#include "graphex/parallel.hpp"

#include <omp.h>

#include <atomic>

namespace graphex {

namespace {
std::atomic<int> g_thread_cap{0};
}

void set_thread_cap(int threads) { g_thread_cap = threads < 0 ? 0 : threads; }

int thread_cap() { return g_thread_cap; }

int available_threads() { return omp_get_max_threads(); }

namespace detail {
int omp_threads_for(int cap) { return cap > 0 ? cap : omp_get_max_threads(); }
}  // namespace detail

double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 8) {
        double s = 0.0;
        for (const double v : values) s += v;
        return s;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace graphex
