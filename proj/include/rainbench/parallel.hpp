#pragma once

namespace rainbench::par {

/// Caps OpenMP worker parallelism. 0 restores the runtime default.
/// Every kernel in this project is thread-count invariant, so this only
/// affects speed, never results.
void set_jobs(int n);

int jobs();

} // namespace rainbench::par
