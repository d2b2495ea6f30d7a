#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <optional>
#include <span>
#include <thread>
#include <vector>

#include "mclique/graph.hpp"

namespace mclique::detail {

/// Best clique found so far, shared between workers. The size is read
/// without synchronization by the pruning tests; a stale value only weakens
/// pruning. Updates are serialized so size and witness always agree.
class Incumbent {
 public:
  explicit Incumbent(std::size_t lb) : size_(lb) {}

  std::size_t size() const noexcept { return size_.load(std::memory_order_relaxed); }

  bool offer(std::span<const Vertex> clique) {
    if (clique.size() <= size()) return false;
    std::lock_guard lock(mutex_);
    if (clique.size() <= size_.load(std::memory_order_relaxed)) return false;
    witness_.assign(clique.begin(), clique.end());
    size_.store(clique.size(), std::memory_order_relaxed);
    return true;
  }

  std::vector<Vertex> witness() const {
    std::lock_guard lock(mutex_);
    auto w = witness_;
    std::sort(w.begin(), w.end());
    return w;
  }

 private:
  std::atomic<std::size_t> size_;
  mutable std::mutex mutex_;
  std::vector<Vertex> witness_;
};

class Deadline {
 public:
  explicit Deadline(std::optional<double> seconds) {
    if (seconds)
      at_ = std::chrono::steady_clock::now() +
            std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                std::chrono::duration<double>(*seconds));
  }

  /// Latches: once expired, every worker sees it.
  bool expired() {
    if (stopped_.load(std::memory_order_relaxed)) return true;
    if (at_ && std::chrono::steady_clock::now() >= *at_) {
      stopped_.store(true, std::memory_order_relaxed);
      return true;
    }
    return false;
  }

  bool stopped() const noexcept { return stopped_.load(std::memory_order_relaxed); }

 private:
  std::optional<std::chrono::steady_clock::time_point> at_;
  std::atomic<bool> stopped_{false};
};

/// Runs `body(worker_index)` on `threads` workers; worker 0 is the caller.
template <typename Body>
void run_workers(unsigned threads, Body&& body) {
  if (threads <= 1) {
    body(0u);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads - 1);
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back([&body, t] { body(t); });
  body(0u);
}

inline double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace mclique::detail
