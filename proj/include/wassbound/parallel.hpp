#pragma once

namespace wassbound {

// Applies WASSBOUND_THREADS (if set to a positive integer) as an upper limit on the
// OpenMP worker count. Returns the resulting maximum.
int configure_threads_from_env();

int max_threads();

}  // namespace wassbound
