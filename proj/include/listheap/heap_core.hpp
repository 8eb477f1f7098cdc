#pragma once

// Storage and the insert-independent operations of the List Heap: an array of
// sorted circular doubly linked lists kept in binary-heap order by head key.
//
// Two invariants hold after every public operation:
//   1. every list is strictly increasing from head to tail;
//   2. head(list at i/2) < head(list at i) for every array position i >= 2.
//
// Nodes live in an arena and are addressed by generation-tagged handles, so a
// handle stays valid across list swaps and reinsertion. Each list record
// carries its current array position, which makes a list swap O(1) and lets
// decrease_key find a node's list without searching.

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "listheap/comp_counter.hpp"
#include "listheap/error.hpp"
#include "listheap/handle.hpp"
#include "listheap/key_registry.hpp"

namespace lheap {

template <typename Key>
class ListHeapCore {
 public:
  using key_type = Key;
  using NodeId = std::uint32_t;
  using ListId = std::uint32_t;
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  ListHeapCore() { array_.push_back(kNone); }

  /// Builds a heap whose array holds exactly `layout`, position by position.
  /// Each list must be non-empty and strictly increasing and all keys unique.
  /// Heap order between lists is NOT enforced; call heapify_up/heapify_down
  /// to repair it. The comparison counter starts at zero. If `handles` is
  /// given it receives the handle of every key, shaped like `layout`.
  static ListHeapCore from_layout(const std::vector<std::vector<Key>>& layout,
                                  std::vector<std::vector<NodeHandle>>* handles = nullptr) {
    ListHeapCore h;
    if (handles) handles->assign(layout.size(), {});
    for (std::size_t l = 0; l < layout.size(); ++l) {
      const auto& list = layout[l];
      if (list.empty()) throw Error(Errc::invalid_argument, "layout contains an empty list");
      std::size_t pos = 0;
      for (std::size_t j = 0; j < list.size(); ++j) {
        if (j > 0 && !(list[j - 1] < list[j])) {
          throw Error(Errc::invalid_argument, "layout list is not strictly increasing");
        }
        NodeId id = h.allocate(list[j]);
        if (handles) (*handles)[l].push_back(h.handle_of(id));
        if (j == 0) {
          pos = h.add_list(id);
        } else {
          h.push_back(pos, id);
        }
      }
    }
    return h;
  }

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  /// Number of lists k currently in the array.
  std::size_t list_count() const noexcept { return array_.size() - 1; }

  std::uint64_t comparisons() const noexcept { return counter_.count(); }
  void reset_comparisons() noexcept { counter_.reset(); }

  NodeHandle find_min() const {
    if (empty()) throw Error(Errc::empty_heap, "find_min on empty heap");
    return handle_of(lists_[array_[1]].head);
  }

  bool contains(NodeHandle h) const noexcept { return resolve_or_none(h) != kNone; }

  const Key& key(NodeHandle h) const { return nodes_[resolve(h)].key; }

  /// Removes the head of the root list. An emptied root list is replaced by
  /// the last list before heapify_down(1) restores heap order.
  std::pair<Key, NodeHandle> delete_min() {
    if (empty()) throw Error(Errc::empty_heap, "delete_min on empty heap");
    const ListId root = array_[1];
    const NodeId x = lists_[root].head;
    const NodeHandle handle = handle_of(x);
    const Key k = nodes_[x].key;

    if (lists_[root].length == 1) {
      release_list(root);
      const ListId last = array_.back();
      array_.pop_back();
      if (array_.size() > 1) {
        array_[1] = last;
        lists_[last].position = 1;
      }
      --size_;
    } else {
      unlink(x);
    }
    if (array_.size() > 1) heapify_down(1);

    registry_.remove(k);
    release_node(x);
    return {k, handle};
  }

  /// Lowers the key of `h` to `new_key`. A decreased head only needs
  /// heapify_up. A non-head that falls below its left sibling is unlinked and
  /// handed to `reinsert`, which must place the (already unlinked) node.
  template <typename Reinsert>
  void decrease_key(NodeHandle h, const Key& new_key, Reinsert&& reinsert) {
    const NodeId x = resolve(h);
    if (!(new_key < nodes_[x].key)) {
      throw Error(Errc::key_increase, "decrease_key to " + detail::key_to_string(new_key) +
                                          " is not below current key " +
                                          detail::key_to_string(nodes_[x].key));
    }
    registry_.check_insertable(new_key);
    registry_.replace(nodes_[x].key, new_key);

    const ListRec& list = lists_[nodes_[x].owner];
    if (list.head == x) {
      nodes_[x].key = new_key;
      heapify_up(list.position);
      return;
    }
    const NodeId left = nodes_[x].prev;
    if (counter_.less(new_key, nodes_[left].key)) {
      unlink(x);
      nodes_[x].key = new_key;
      reinsert(x);
    } else {
      nodes_[x].key = new_key;
    }
  }

  void heapify_down(std::size_t pos) {
    assert(pos >= 1 && pos <= list_count());
    const std::size_t k = list_count();
    while (2 * pos <= k) {
      std::size_t child = 2 * pos;
      if (child + 1 <= k && counter_.less(head_key(child + 1), head_key(child))) ++child;
      if (!counter_.less(head_key(child), head_key(pos))) break;
      swap_positions(pos, child);
      pos = child;
    }
  }

  void heapify_up(std::size_t pos) {
    assert(pos >= 1 && pos <= list_count());
    while (pos > 1 && counter_.less(head_key(pos), head_key(pos / 2))) {
      swap_positions(pos, pos / 2);
      pos /= 2;
    }
  }

  /// Keys of every list, in array position order.
  std::vector<std::vector<Key>> lists() const {
    std::vector<std::vector<Key>> out;
    out.reserve(list_count());
    for (std::size_t pos = 1; pos <= list_count(); ++pos) {
      const ListRec& list = lists_[array_[pos]];
      std::vector<Key> keys;
      keys.reserve(list.length);
      NodeId n = list.head;
      for (std::size_t j = 0; j < list.length; ++j, n = nodes_[n].next) keys.push_back(nodes_[n].key);
      out.push_back(std::move(keys));
    }
    return out;
  }

  /// Full structural audit without touching the comparison counter. Returns a
  /// description of the first violated invariant, or nothing.
  std::optional<std::string> find_violation() const {
    std::size_t total = 0;
    for (std::size_t pos = 1; pos < array_.size(); ++pos) {
      const ListId id = array_[pos];
      if (id >= lists_.size() || !lists_[id].live) return "array slot " + std::to_string(pos) + " names a dead list";
      const ListRec& list = lists_[id];
      if (list.position != pos) return "list position field mismatch at " + std::to_string(pos);
      if (list.length == 0) return "empty list at position " + std::to_string(pos);
      NodeId n = list.head;
      for (std::size_t j = 0; j < list.length; ++j) {
        const Node& node = nodes_[n];
        if (!node.live) return "dead node linked in list at position " + std::to_string(pos);
        if (node.owner != id) return "owner mismatch in list at position " + std::to_string(pos);
        if (nodes_[node.next].prev != n) return "broken links in list at position " + std::to_string(pos);
        if (j + 1 < list.length && !(node.key < nodes_[node.next].key)) {
          return "list at position " + std::to_string(pos) + " is not strictly increasing";
        }
        n = node.next;
      }
      if (n != list.head) return "list at position " + std::to_string(pos) + " is not circular with its length";
      if (pos >= 2 && !(head_key(pos / 2) < head_key(pos))) {
        return "heap order violated between positions " + std::to_string(pos / 2) + " and " +
               std::to_string(pos);
      }
      total += list.length;
    }
    if (total != size_) return "size bookkeeping mismatch";
    return std::nullopt;
  }

  // ---- Placement interface used by insert strategies -----------------------
  // Positions are 1-based. allocate() creates an unlinked node; exactly one of
  // push_front/push_back/add_list must then link it.

  bool less(const Key& a, const Key& b) noexcept { return counter_.less(a, b); }

  const Key& head_key(std::size_t pos) const { return nodes_[lists_[array_[pos]].head].key; }
  const Key& tail_key(std::size_t pos) const { return nodes_[nodes_[lists_[array_[pos]].head].prev].key; }
  const Key& node_key(NodeId id) const { return nodes_[id].key; }

  NodeId allocate(const Key& k) {
    registry_.check_insertable(k);
    NodeId id;
    if (!free_nodes_.empty()) {
      id = free_nodes_.back();
      free_nodes_.pop_back();
    } else {
      if (nodes_.size() >= kNone) throw Error(Errc::infeasible, "node arena exhausted");
      id = static_cast<NodeId>(nodes_.size());
      nodes_.emplace_back();
    }
    Node& n = nodes_[id];
    n.key = k;
    n.prev = n.next = id;
    n.owner = kNone;
    n.live = true;
    registry_.add(k);
    return id;
  }

  void push_front(std::size_t pos, NodeId id) {
    const ListId lid = array_[pos];
    link_before_head(lid, id);
    lists_[lid].head = id;
  }

  void push_back(std::size_t pos, NodeId id) { link_before_head(array_[pos], id); }

  /// Creates a singleton list at position k+1 and returns that position.
  std::size_t add_list(NodeId id) {
    ListId lid;
    if (!free_lists_.empty()) {
      lid = free_lists_.back();
      free_lists_.pop_back();
    } else {
      lid = static_cast<ListId>(lists_.size());
      lists_.emplace_back();
    }
    ListRec& list = lists_[lid];
    list.head = id;
    list.length = 1;
    list.live = true;
    array_.push_back(lid);
    list.position = array_.size() - 1;
    nodes_[id].prev = nodes_[id].next = id;
    nodes_[id].owner = lid;
    ++size_;
    return list.position;
  }

  NodeHandle handle_of(NodeId id) const { return {id, nodes_[id].generation}; }

 private:
  struct Node {
    Key key{};
    NodeId prev = kNone;
    NodeId next = kNone;
    ListId owner = kNone;
    std::uint32_t generation = 0;
    bool live = false;
  };

  struct ListRec {
    NodeId head = kNone;
    std::size_t length = 0;
    std::size_t position = 0;
    bool live = false;
  };

  NodeId resolve_or_none(NodeHandle h) const noexcept {
    if (h.index >= nodes_.size()) return kNone;
    const Node& n = nodes_[h.index];
    if (!n.live || n.generation != h.generation) return kNone;
    return h.index;
  }

  NodeId resolve(NodeHandle h) const {
    const NodeId id = resolve_or_none(h);
    if (id == kNone) throw Error(Errc::invalid_handle, "handle does not name a live node");
    return id;
  }

  void link_before_head(ListId lid, NodeId id) {
    ListRec& list = lists_[lid];
    const NodeId head = list.head;
    const NodeId tail = nodes_[head].prev;
    nodes_[id].prev = tail;
    nodes_[id].next = head;
    nodes_[tail].next = id;
    nodes_[head].prev = id;
    nodes_[id].owner = lid;
    ++list.length;
    ++size_;
  }

  // Detaches a node from a list of length >= 2.
  void unlink(NodeId id) {
    Node& n = nodes_[id];
    ListRec& list = lists_[n.owner];
    assert(list.length >= 2);
    nodes_[n.prev].next = n.next;
    nodes_[n.next].prev = n.prev;
    if (list.head == id) list.head = n.next;
    --list.length;
    --size_;
    n.prev = n.next = id;
    n.owner = kNone;
  }

  void release_node(NodeId id) {
    Node& n = nodes_[id];
    n.live = false;
    n.owner = kNone;
    ++n.generation;
    free_nodes_.push_back(id);
  }

  void release_list(ListId id) {
    lists_[id].live = false;
    lists_[id].length = 0;
    lists_[id].head = kNone;
    free_lists_.push_back(id);
  }

  void swap_positions(std::size_t a, std::size_t b) {
    std::swap(array_[a], array_[b]);
    lists_[array_[a]].position = a;
    lists_[array_[b]].position = b;
  }

  std::vector<Node> nodes_;
  std::vector<NodeId> free_nodes_;
  std::vector<ListRec> lists_;
  std::vector<ListId> free_lists_;
  std::vector<ListId> array_;  // 1-based; slot 0 unused
  std::size_t size_ = 0;
  CompCounter counter_;
  detail::KeyRegistry<Key> registry_;
};

}  // namespace lheap
