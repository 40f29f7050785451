#include "indexlab/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace indexlab {

int configure_threads() {
#ifdef _OPENMP
  if (const char* env = std::getenv("INDEXLAB_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap > 0 && cap < omp_get_max_threads()) omp_set_num_threads(cap);
    } catch (const std::exception&) {
      // ignored: a malformed cap leaves the runtime default
    }
  }
  return omp_get_max_threads();
#else
  return 1;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace indexlab
