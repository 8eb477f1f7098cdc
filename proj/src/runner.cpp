#include "listheap/runner.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "listheap/binary_heap.hpp"
#include "listheap/ea_heap.hpp"
#include "listheap/ra_heap.hpp"

namespace lheap {
namespace {

using Clock = std::chrono::steady_clock;

template <typename Heap>
RunStats sort_with(std::span<const std::int64_t> keys, std::vector<std::int64_t>& drained) {
  Heap heap;
  RunStats stats;
  drained.clear();
  drained.reserve(keys.size());

  const auto start = Clock::now();
  for (std::int64_t k : keys) heap.insert(k);
  if constexpr (requires { heap.list_count(); }) stats.final_lists = heap.list_count();
  while (!heap.empty()) {
    const std::uint64_t before = heap.comparisons();
    drained.push_back(heap.delete_min().first);
    const std::uint64_t spent = heap.comparisons() - before;
    stats.max_delete_min_comparisons = std::max(stats.max_delete_min_comparisons, spent);
    stats.delete_min_comparisons += spent;
  }
  const auto stop = Clock::now();

  stats.wall_ns = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
  stats.total_comparisons = heap.comparisons();
  stats.inserts = keys.size();
  stats.delete_mins = keys.size();
  return stats;
}

template <typename Heap>
DijkstraRun dijkstra_with(const Graph& g, std::size_t source) {
  Heap heap;
  DijkstraCounters counters;
  DijkstraRun run;
  const auto start = Clock::now();
  run.result = dijkstra(g, source, heap, &counters);
  const auto stop = Clock::now();
  run.stats.wall_ns =
      static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
  run.stats.total_comparisons = heap.comparisons();
  run.stats.max_delete_min_comparisons = counters.max_delete_min_comparisons;
  run.stats.delete_min_comparisons = counters.delete_min_comparisons;
  if constexpr (requires { heap.list_count(); }) run.stats.final_lists = counters.peak_lists;
  run.stats.inserts = counters.inserts;
  run.stats.delete_mins = counters.delete_mins;
  run.stats.decrease_keys = counters.decrease_keys;
  return run;
}

}  // namespace

RunStats run_sort(HeapKind kind, std::span<const std::int64_t> keys, std::vector<std::int64_t>* sorted) {
  std::vector<std::int64_t> drained;
  RunStats stats;
  switch (kind) {
    case HeapKind::ra: stats = sort_with<RAListHeap<std::int64_t>>(keys, drained); break;
    case HeapKind::ea: stats = sort_with<EAListHeap<std::int64_t>>(keys, drained); break;
    case HeapKind::binary: stats = sort_with<BinaryHeap<std::int64_t>>(keys, drained); break;
  }
  std::vector<std::int64_t> expected(keys.begin(), keys.end());
  std::sort(expected.begin(), expected.end());
  if (drained != expected) throw std::logic_error("heap drain is not the sorted input");
  if (sorted) *sorted = std::move(drained);
  return stats;
}

DijkstraRun run_dijkstra(const Graph& g, std::size_t source, HeapKind kind) {
  switch (kind) {
    case HeapKind::ra: return dijkstra_with<RAListHeap<std::int64_t>>(g, source);
    case HeapKind::ea: return dijkstra_with<EAListHeap<std::int64_t>>(g, source);
    case HeapKind::binary: return dijkstra_with<BinaryHeap<std::int64_t>>(g, source);
  }
  throw std::logic_error("unknown heap kind");
}

ShortestPathResult dijkstra(const Graph& g, std::size_t source, HeapKind kind, DijkstraCounters* counters) {
  switch (kind) {
    case HeapKind::ra: {
      RAListHeap<std::int64_t> heap;
      return dijkstra(g, source, heap, counters);
    }
    case HeapKind::ea: {
      EAListHeap<std::int64_t> heap;
      return dijkstra(g, source, heap, counters);
    }
    case HeapKind::binary: {
      BinaryHeap<std::int64_t> heap;
      return dijkstra(g, source, heap, counters);
    }
  }
  throw std::logic_error("unknown heap kind");
}

}  // namespace lheap
