#pragma once

#include <cstddef>
#include <utility>

#include "listheap/heap_core.hpp"

namespace lheap {

/// A List Heap bound to an insert strategy. The strategy supplies
/// `static void place(ListHeapCore<Key>&, NodeId)`, which links an allocated
/// node somewhere that keeps both invariants. The same strategy places nodes
/// that decrease_key had to pull out of their list.
template <typename Key, typename Strategy>
class ListHeap {
 public:
  using key_type = Key;
  using Core = ListHeapCore<Key>;

  ListHeap() = default;

  NodeHandle insert(const Key& k) {
    const auto id = core_.allocate(k);
    Strategy::place(core_, id);
    return core_.handle_of(id);
  }

  NodeHandle find_min() const { return core_.find_min(); }
  std::pair<Key, NodeHandle> delete_min() { return core_.delete_min(); }

  void decrease_key(NodeHandle h, const Key& k) {
    core_.decrease_key(h, k, [this](typename Core::NodeId id) { Strategy::place(core_, id); });
  }

  const Key& key(NodeHandle h) const { return core_.key(h); }
  bool contains(NodeHandle h) const noexcept { return core_.contains(h); }
  std::size_t size() const noexcept { return core_.size(); }
  bool empty() const noexcept { return core_.empty(); }
  std::size_t list_count() const noexcept { return core_.list_count(); }
  std::uint64_t comparisons() const noexcept { return core_.comparisons(); }
  void reset_comparisons() noexcept { core_.reset_comparisons(); }
  std::vector<std::vector<Key>> lists() const { return core_.lists(); }
  std::optional<std::string> find_violation() const { return core_.find_violation(); }

  Core& core() noexcept { return core_; }
  const Core& core() const noexcept { return core_; }

 private:
  Core core_;
};

}  // namespace lheap
