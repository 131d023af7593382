#pragma once

namespace qcount {

// Threads used by the parallel kernels: an explicit request wins, then the
// QCOUNT_THREADS environment variable, then the OpenMP default.
int resolve_threads(int requested = 0);

}  // namespace qcount
