#ifndef SEMINF_PARALLEL_HPP
#define SEMINF_PARALLEL_HPP

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace seminf {

inline int default_jobs() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

/// Number of chunks parallel_chunks will use; size per-chunk result
/// buffers with this.
inline std::size_t chunk_count(std::uint64_t count, int jobs) {
  if (jobs < 1) jobs = 1;
  const std::uint64_t n =
      std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), count);
  return static_cast<std::size_t>(n < 1 ? 1 : n);
}

/// Splits [0, count) into `jobs` contiguous chunks and runs
/// fn(chunk_index, begin, end) on worker threads. Chunk boundaries depend
/// only on count and jobs, so any order-respecting merge of per-chunk
/// results is independent of scheduling.
template <class Fn>
void parallel_chunks(std::uint64_t count, int jobs, Fn&& fn) {
  if (jobs < 1) jobs = 1;
  const std::uint64_t nchunks =
      std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), count);
  if (nchunks <= 1) {
    if (count > 0) fn(0, std::uint64_t{0}, count);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(nchunks);
  const std::uint64_t per = count / nchunks, extra = count % nchunks;
  std::uint64_t begin = 0;
  for (std::uint64_t c = 0; c < nchunks; ++c) {
    const std::uint64_t len = per + (c < extra ? 1 : 0);
    workers.emplace_back([&fn, c, begin, end = begin + len] {
      fn(static_cast<std::size_t>(c), begin, end);
    });
    begin += len;
  }
  for (auto& w : workers) w.join();
}

/// Scans [0, count) for the smallest index accepted by pred, in parallel.
/// Returns count when no index is accepted. Chunks past an already-found
/// hit are abandoned, which never affects the result: a hit only suppresses
/// indices larger than itself.
template <class Pred>
std::uint64_t parallel_find_first(std::uint64_t count, int jobs, Pred&& pred) {
  std::atomic<std::uint64_t> best{count};
  parallel_chunks(count, jobs, [&](std::size_t, std::uint64_t b, std::uint64_t e) {
    for (std::uint64_t i = b; i < e; ++i) {
      if ((i & 0x3ff) == 0 && best.load(std::memory_order_relaxed) < b) return;
      if (best.load(std::memory_order_relaxed) <= i) return;
      if (pred(i)) {
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        while (i < cur &&
               !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
        }
        return;
      }
    }
  });
  return best.load();
}

}  // namespace seminf

#endif  // SEMINF_PARALLEL_HPP
