#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace egt::detail {

#ifdef _OPENMP
inline int max_threads() { return omp_get_max_threads(); }
inline int thread_id() { return omp_get_thread_num(); }
#else
inline int max_threads() { return 1; }
inline int thread_id() { return 0; }
#endif

}  // namespace egt::detail
