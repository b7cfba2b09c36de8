#ifndef DECILIM_PARALLEL_HPP
#define DECILIM_PARALLEL_HPP

#ifdef _OPENMP
#include <omp.h>
#else
inline int omp_get_max_threads() { return 1; }
inline int omp_get_thread_num() { return 0; }
inline void omp_set_num_threads(int) {}
#endif

namespace decilim {

// Worker count used by the parallel kernels; 0 keeps the OpenMP default.
void set_thread_count(int n);
int thread_count();

} // namespace decilim

#endif
