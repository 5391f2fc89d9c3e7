#pragma once

namespace cubeslides {

// Thread-count knob shared by every OpenMP kernel: an explicit request wins,
// then the CUBESLIDES_THREADS environment variable, then the OpenMP default.
// Always returns at least 1.
int resolve_threads(int requested);

}  // namespace cubeslides
