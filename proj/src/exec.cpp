#include "mjack/exec.hpp"

#include <omp.h>

namespace mjack {

int worker_count() { return omp_get_max_threads(); }

} // namespace mjack
