#include "decilim/parallel.hpp"

#include <atomic>

namespace decilim {

namespace {
std::atomic<int> g_threads{0};
}

void set_thread_count(int n) {
    g_threads.store(n);
    if (n > 0) omp_set_num_threads(n);
}

int thread_count() {
    int n = g_threads.load();
    return n > 0 ? n : omp_get_max_threads();
}

} // namespace decilim
