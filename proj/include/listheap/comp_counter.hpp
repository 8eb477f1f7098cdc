#pragma once

#include <cstdint>

namespace lheap {

/// Counts key-vs-key comparisons. Every ordering decision a heap makes on keys
/// goes through less(); index arithmetic and bookkeeping never touch it.
class CompCounter {
 public:
  template <typename Key>
  bool less(const Key& a, const Key& b) noexcept {
    ++count_;
    return a < b;
  }

  std::uint64_t count() const noexcept { return count_; }
  void reset() noexcept { count_ = 0; }

 private:
  std::uint64_t count_ = 0;
};

}  // namespace lheap
