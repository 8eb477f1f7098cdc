#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "listheap/comp_counter.hpp"
#include "listheap/error.hpp"
#include "listheap/handle.hpp"
#include "listheap/key_registry.hpp"

namespace lheap {

/// Textbook implicit binary min-heap with handle-based decrease_key. Shares
/// the comparison accounting of the list heaps so counts are comparable.
template <typename Key>
class BinaryHeap {
 public:
  using key_type = Key;

  BinaryHeap() { slab_.push_back({}); }

  NodeHandle insert(const Key& k) {
    registry_.check_insertable(k);
    std::uint32_t id;
    if (!free_ids_.empty()) {
      id = free_ids_.back();
      free_ids_.pop_back();
    } else {
      id = static_cast<std::uint32_t>(slots_.size());
      slots_.emplace_back();
    }
    registry_.add(k);
    slots_[id].live = true;
    slab_.push_back({k, id});
    slots_[id].index = slab_.size() - 1;
    sift_up(slab_.size() - 1);
    return {id, slots_[id].generation};
  }

  NodeHandle find_min() const {
    if (empty()) throw Error(Errc::empty_heap, "find_min on empty heap");
    const std::uint32_t id = slab_[1].id;
    return {id, slots_[id].generation};
  }

  std::pair<Key, NodeHandle> delete_min() {
    if (empty()) throw Error(Errc::empty_heap, "delete_min on empty heap");
    const Entry top = slab_[1];
    const NodeHandle handle{top.id, slots_[top.id].generation};
    slab_[1] = slab_.back();
    slots_[slab_[1].id].index = 1;
    slab_.pop_back();
    if (!empty()) sift_down(1);

    Slot& s = slots_[top.id];
    s.live = false;
    ++s.generation;
    free_ids_.push_back(top.id);
    registry_.remove(top.key);
    return {top.key, handle};
  }

  void decrease_key(NodeHandle h, const Key& k) {
    const std::size_t i = resolve(h);
    if (!(k < slab_[i].key)) {
      throw Error(Errc::key_increase, "decrease_key to " + detail::key_to_string(k) +
                                          " is not below current key " +
                                          detail::key_to_string(slab_[i].key));
    }
    registry_.check_insertable(k);
    registry_.replace(slab_[i].key, k);
    slab_[i].key = k;
    sift_up(i);
  }

  const Key& key(NodeHandle h) const { return slab_[resolve(h)].key; }
  bool contains(NodeHandle h) const noexcept {
    return h.index < slots_.size() && slots_[h.index].live && slots_[h.index].generation == h.generation;
  }
  std::size_t size() const noexcept { return slab_.size() - 1; }
  bool empty() const noexcept { return size() == 0; }
  std::uint64_t comparisons() const noexcept { return counter_.count(); }
  void reset_comparisons() noexcept { counter_.reset(); }

  /// Keys in slab order (index 1 first).
  std::vector<Key> keys() const {
    std::vector<Key> out;
    out.reserve(size());
    for (std::size_t i = 1; i < slab_.size(); ++i) out.push_back(slab_[i].key);
    return out;
  }

  std::optional<std::string> find_violation() const {
    for (std::size_t i = 1; i < slab_.size(); ++i) {
      const Entry& e = slab_[i];
      if (e.id >= slots_.size() || !slots_[e.id].live || slots_[e.id].index != i) {
        return "position map inconsistent at slab index " + std::to_string(i);
      }
      if (i >= 2 && !(slab_[i / 2].key < e.key)) {
        return "heap order violated between " + std::to_string(i / 2) + " and " + std::to_string(i);
      }
    }
    std::size_t live = 0;
    for (const Slot& s : slots_) live += s.live ? 1 : 0;
    if (live != size()) return "live handle count differs from size";
    return std::nullopt;
  }

 private:
  struct Entry {
    Key key{};
    std::uint32_t id = 0;
  };
  struct Slot {
    std::size_t index = 0;
    std::uint32_t generation = 0;
    bool live = false;
  };

  std::size_t resolve(NodeHandle h) const {
    if (!contains(h)) throw Error(Errc::invalid_handle, "handle does not name a live entry");
    return slots_[h.index].index;
  }

  void place(std::size_t i, const Entry& e) {
    slab_[i] = e;
    slots_[e.id].index = i;
  }

  void sift_up(std::size_t i) {
    const Entry moving = slab_[i];
    while (i > 1 && counter_.less(moving.key, slab_[i / 2].key)) {
      place(i, slab_[i / 2]);
      i /= 2;
    }
    place(i, moving);
  }

  void sift_down(std::size_t i) {
    const Entry moving = slab_[i];
    const std::size_t n = size();
    while (2 * i <= n) {
      std::size_t child = 2 * i;
      if (child + 1 <= n && counter_.less(slab_[child + 1].key, slab_[child].key)) ++child;
      if (!counter_.less(slab_[child].key, moving.key)) break;
      place(i, slab_[child]);
      i = child;
    }
    place(i, moving);
  }

  std::vector<Entry> slab_;  // 1-based; slot 0 unused
  std::vector<Slot> slots_;
  std::vector<std::uint32_t> free_ids_;
  CompCounter counter_;
  detail::KeyRegistry<Key> registry_;
};

}  // namespace lheap
