#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace torus {

/// Monotone bucketed scheduler keyed by first-row rotation count.
///
/// Replaces a general min-heap: a pending column rotation is never more
/// than `horizon - 1` time instants away, so `horizon` buckets indexed
/// by time modulo horizon suffice. Scheduling is O(1); advancing one
/// time instant returns the due column indices in ascending order.
class EventWheel {
 public:
  explicit EventWheel(int horizon) : buckets_(horizon) {
    if (horizon < 1) throw std::logic_error("EventWheel: horizon must be positive");
  }

  std::int64_t now() const { return time_; }
  std::int64_t pending() const { return pending_; }
  int horizon() const { return int(buckets_.size()); }

  void schedule(int column, std::int64_t due) {
    if (due < time_ || due >= time_ + horizon()) {
      throw std::logic_error("EventWheel: due time outside the horizon window");
    }
    buckets_[std::size_t(due % horizon())].push_back(column);
    ++pending_;
  }

  /// Pop everything due at the current instant, then advance the clock.
  std::vector<int> advance() {
    auto& slot = buckets_[std::size_t(time_ % horizon())];
    std::vector<int> due;
    due.swap(slot);
    std::sort(due.begin(), due.end());
    pending_ -= std::int64_t(due.size());
    ++time_;
    return due;
  }

 private:
  std::vector<std::vector<int>> buckets_;
  std::int64_t time_ = 0;
  std::int64_t pending_ = 0;
};

}  // namespace torus
