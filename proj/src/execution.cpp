#include "hermdiag/execution.hpp"

#include <omp.h>

namespace hermdiag {

int max_threads() { return omp_get_max_threads(); }

}  // namespace hermdiag
