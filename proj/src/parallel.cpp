#include "crosskiss/parallel.hpp"

#include <cstdlib>

namespace crosskiss {

namespace {

int initial_worker_count() {
  if (const char* env = std::getenv("CROSSKISS_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::atomic<int> g_workers{0};

}  // namespace

int worker_count() {
  int v = g_workers.load(std::memory_order_relaxed);
  if (v == 0) {
    v = initial_worker_count();
    g_workers.store(v, std::memory_order_relaxed);
  }
  return v;
}

void set_worker_count(int n) { g_workers.store(n < 1 ? 1 : n, std::memory_order_relaxed); }

}  // namespace crosskiss
