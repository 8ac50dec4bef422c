#pragma once

namespace droplet {

/// Parallelism cap: DROPLET_THREADS from the environment when set, otherwise
/// the hardware concurrency (at least 1).
int thread_budget();

}  // namespace droplet
