#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace crosskiss {

/// Worker cap shared by all parallelizable operations. Defaults to the
/// hardware count; the CLI --threads flag and CROSSKISS_THREADS env var set it.
int worker_count();
void set_worker_count(int n);

/// Splits [0, count) into fixed-size chunks (independent of the worker
/// count), processes them on up to worker_count() threads, and merges the
/// per-chunk results in chunk order. Output is therefore identical for any
/// number of workers.
template <typename Result, typename ChunkFn, typename MergeFn>
Result parallel_chunk_reduce(std::size_t count, Result init, ChunkFn chunk_fn, MergeFn merge,
                             std::size_t chunk_size = 1 << 16) {
  if (count == 0) return init;
  std::size_t chunks = (count + chunk_size - 1) / chunk_size;
  int workers = worker_count();
  if (workers <= 1 || chunks == 1) {
    Result acc = std::move(init);
    for (std::size_t c = 0; c < chunks; ++c) {
      std::size_t b = c * chunk_size;
      std::size_t e = b + chunk_size < count ? b + chunk_size : count;
      acc = merge(std::move(acc), chunk_fn(b, e));
    }
    return acc;
  }
  std::vector<Result> results(chunks, init);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      std::size_t c = next.fetch_add(1);
      if (c >= chunks) return;
      std::size_t b = c * chunk_size;
      std::size_t e = b + chunk_size < count ? b + chunk_size : count;
      results[c] = chunk_fn(b, e);
    }
  };
  std::vector<std::thread> pool;
  int spawn = workers < static_cast<int>(chunks) ? workers : static_cast<int>(chunks);
  pool.reserve(static_cast<std::size_t>(spawn));
  for (int i = 0; i < spawn; ++i) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  Result acc = std::move(init);
  for (std::size_t c = 0; c < chunks; ++c) acc = merge(std::move(acc), std::move(results[c]));
  return acc;
}

}  // namespace crosskiss
