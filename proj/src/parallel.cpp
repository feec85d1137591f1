#include "wassbound/parallel.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <string>

namespace wassbound {

int configure_threads_from_env() {
    if (const char* v = std::getenv("WASSBOUND_THREADS")) {
        try {
            const int cap = std::stoi(v);
            if (cap > 0) omp_set_num_threads(std::min(cap, omp_get_max_threads()));
        } catch (const std::exception&) {
        }
    }
    return omp_get_max_threads();
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace wassbound
