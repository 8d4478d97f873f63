#include "rainbench/parallel.hpp"

#include <atomic>

#include <omp.h>

namespace rainbench::par {

namespace {
std::atomic<int> g_jobs{0};
}

void set_jobs(int n) {
    g_jobs.store(n < 0 ? 0 : n);
    if (n > 0) {
        omp_set_num_threads(n);
    } else {
        omp_set_num_threads(omp_get_num_procs());
    }
}

int jobs() { return g_jobs.load(); }

} // namespace rainbench::par
