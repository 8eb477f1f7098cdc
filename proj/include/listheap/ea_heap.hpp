#pragma once

#include <cstddef>
#include <optional>

#include "listheap/list_heap.hpp"

namespace lheap {

/// Enc-adaptive placement: tries to grow an encroaching set, one list per
/// sequence.
///
/// Both searches are ordinary binary searches over array positions 1..k that
/// treat heads as ascending and tails as descending. That holds exactly while
/// the heap has only seen inserts (the lists then form an encroaching set);
/// after delete_min or decrease_key the searches become heuristics. Heap order
/// never depends on them: a front placement always climbs through the
/// ancestors, and a tail append leaves every head unchanged.
struct EncAdaptive {
  /// Position of the smallest probed head above `y`, if any.
  template <typename Key>
  static std::optional<std::size_t> front_search(ListHeapCore<Key>& h, const Key& y) {
    std::size_t lo = 1;
    std::size_t hi = h.list_count();
    std::optional<std::size_t> found;
    while (lo <= hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (h.less(y, h.head_key(mid))) {
        found = mid;
        hi = mid - 1;
      } else {
        lo = mid + 1;
      }
    }
    return found;
  }

  /// Position of the largest probed tail below `y`, if any.
  template <typename Key>
  static std::optional<std::size_t> tail_search(ListHeapCore<Key>& h, const Key& y) {
    std::size_t lo = 1;
    std::size_t hi = h.list_count();
    std::optional<std::size_t> found;
    while (lo <= hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (h.less(h.tail_key(mid), y)) {
        found = mid;
        hi = mid - 1;
      } else {
        lo = mid + 1;
      }
    }
    return found;
  }

  template <typename Key>
  static void place(ListHeapCore<Key>& h, typename ListHeapCore<Key>::NodeId id) {
    const std::size_t k = h.list_count();
    if (k == 0) {
      h.add_list(id);
      return;
    }
    const Key y = h.node_key(id);

    if (auto front = front_search(h, y)) {
      std::size_t i = *front;
      while (i > 1 && h.less(y, h.head_key(i / 2))) i /= 2;
      h.push_front(i, id);
      return;
    }
    if (auto tail = tail_search(h, y)) {
      h.push_back(*tail, id);
      return;
    }
    // New list at k+1 unless an ancestor of that slot can take y at its front.
    std::size_t i = k + 1;
    while (i > 1 && h.less(y, h.head_key(i / 2))) i /= 2;
    if (i == k + 1) {
      h.add_list(id);
    } else {
      h.push_front(i, id);
    }
  }
};

template <typename Key>
using EAListHeap = ListHeap<Key, EncAdaptive>;

}  // namespace lheap
