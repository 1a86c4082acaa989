#pragma once

#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace zicount {

// Persistent worker pool. run_chunks hands out chunk indices dynamically;
// determinism comes from callers writing results into per-chunk slots and
// combining them in fixed chunk order afterwards, never from scheduling.
class ThreadPool {
 public:
  explicit ThreadPool(unsigned threads);
  ~ThreadPool();

  ThreadPool(const ThreadPool&) = delete;
  ThreadPool& operator=(const ThreadPool&) = delete;

  unsigned size() const { return n_threads_; }

  void run_chunks(std::size_t n_chunks, const std::function<void(std::size_t)>& fn);

 private:
  void worker_loop();

  unsigned n_threads_;
  std::vector<std::thread> workers_;
  std::mutex mu_;
  std::condition_variable cv_work_;
  std::condition_variable cv_done_;
  const std::function<void(std::size_t)>* fn_ = nullptr;
  std::size_t next_ = 0;
  std::size_t total_ = 0;
  std::size_t in_flight_ = 0;
  std::size_t generation_ = 0;
  bool stop_ = false;
  std::exception_ptr error_;
};

// Observation chunk size for likelihood reductions. Fixed so results are
// bit-identical regardless of the thread count.
inline constexpr std::size_t kReduceChunk = 1024;

inline std::size_t n_chunks(std::size_t n, std::size_t chunk = kReduceChunk) {
  return n == 0 ? 0 : (n - 1) / chunk + 1;
}

// Fills acc[j] = body(begin_j, end_j) for each fixed-size chunk, then
// merges pairwise in a fixed-order tree: merge(acc[i], acc[i+stride]).
template <class Acc, class Body, class Merge>
Acc chunked_reduce(std::size_t n, ThreadPool& pool, Acc init, const Body& body,
                   const Merge& merge, std::size_t chunk = kReduceChunk) {
  const std::size_t m = n_chunks(n, chunk);
  if (m == 0) return init;
  std::vector<Acc> acc(m, init);
  pool.run_chunks(m, [&](std::size_t j) {
    const std::size_t lo = j * chunk;
    const std::size_t hi = lo + chunk < n ? lo + chunk : n;
    body(acc[j], lo, hi);
  });
  for (std::size_t stride = 1; stride < m; stride *= 2)
    for (std::size_t i = 0; i + stride < m; i += 2 * stride)
      merge(acc[i], acc[i + stride]);
  return acc[0];
}

}  // namespace zicount
