#pragma once

#include "listheap/list_heap.hpp"

namespace lheap {

/// Runs-adaptive placement. Start at the last list if the key is below its
/// head, otherwise at the would-be new position k+1, then climb while the key
/// is below the parent's head and prepend there. Consecutive inserts from one
/// decreasing run always land in existing lists, so an insert-only history
/// never produces more lists than the input has runs.
struct RunsAdaptive {
  template <typename Key>
  static void place(ListHeapCore<Key>& h, typename ListHeapCore<Key>::NodeId id) {
    const std::size_t k = h.list_count();
    if (k == 0) {
      h.add_list(id);
      return;
    }
    const Key x = h.node_key(id);
    std::size_t i = h.less(x, h.head_key(k)) ? k : k + 1;
    while (i > 1 && h.less(x, h.head_key(i / 2))) i /= 2;
    if (i == k + 1) {
      h.add_list(id);
    } else {
      h.push_front(i, id);
    }
  }
};

template <typename Key>
using RAListHeap = ListHeap<Key, RunsAdaptive>;

}  // namespace lheap
