#include "droplet/threads.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace droplet {

int thread_budget() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("DROPLET_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) return std::min(cap, 256);
  }
  return hw;
}

}  // namespace droplet
