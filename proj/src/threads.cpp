#include "zicount/threads.hpp"

namespace zicount {

ThreadPool::ThreadPool(unsigned threads) : n_threads_(threads == 0 ? 1 : threads) {
  for (unsigned i = 1; i < n_threads_; ++i)
    workers_.emplace_back([this] { worker_loop(); });
}

ThreadPool::~ThreadPool() {
  {
    std::lock_guard lock(mu_);
    stop_ = true;
  }
  cv_work_.notify_all();
  for (auto& w : workers_) w.join();
}

void ThreadPool::worker_loop() {
  std::unique_lock lock(mu_);
  std::size_t seen_generation = 0;
  for (;;) {
    cv_work_.wait(lock, [&] {
      return stop_ || (fn_ != nullptr && generation_ != seen_generation);
    });
    if (stop_) return;
    seen_generation = generation_;
    while (next_ < total_) {
      const std::size_t j = next_++;
      ++in_flight_;
      lock.unlock();
      try {
        (*fn_)(j);
      } catch (...) {
        lock.lock();
        if (!error_) error_ = std::current_exception();
        --in_flight_;
        continue;
      }
      lock.lock();
      --in_flight_;
    }
    if (in_flight_ == 0) cv_done_.notify_all();
  }
}

void ThreadPool::run_chunks(std::size_t n, const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  if (n_threads_ == 1 || n == 1) {
    for (std::size_t j = 0; j < n; ++j) fn(j);
    return;
  }
  std::unique_lock lock(mu_);
  fn_ = &fn;
  next_ = 0;
  total_ = n;
  error_ = nullptr;
  ++generation_;
  cv_work_.notify_all();
  // The calling thread works too.
  while (next_ < total_) {
    const std::size_t j = next_++;
    ++in_flight_;
    lock.unlock();
    try {
      fn(j);
    } catch (...) {
      lock.lock();
      if (!error_) error_ = std::current_exception();
      --in_flight_;
      continue;
    }
    lock.lock();
    --in_flight_;
  }
  cv_done_.wait(lock, [&] { return in_flight_ == 0; });
  fn_ = nullptr;
  if (error_) std::rethrow_exception(error_);
}

}  // namespace zicount
