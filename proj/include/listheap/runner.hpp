#pragma once

// Timed drivers for the benchmark workloads. Timing covers the heap operation
// loop only; generation and result verification happen outside it.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "listheap/dijkstra.hpp"
#include "listheap/graph.hpp"
#include "listheap/heap_kind.hpp"

namespace lheap {

struct RunStats {
  std::uint64_t total_comparisons = 0;
  std::uint64_t max_delete_min_comparisons = 0;
  /// Comparisons spent inside delete_min calls only.
  std::uint64_t delete_min_comparisons = 0;
  /// List count after the insert phase for sorting, peak list count for
  /// Dijkstra. Absent for the binary heap.
  std::optional<std::size_t> final_lists;
  std::uint64_t wall_ns = 0;
  std::uint64_t inserts = 0;
  std::uint64_t delete_mins = 0;
  std::uint64_t decrease_keys = 0;
};

/// Inserts every key, then drains with delete_min. Throws std::logic_error if
/// the drain is not the sorted input.
RunStats run_sort(HeapKind kind, std::span<const std::int64_t> keys, std::vector<std::int64_t>* sorted = nullptr);

struct DijkstraRun {
  ShortestPathResult result;
  RunStats stats;
};

DijkstraRun run_dijkstra(const Graph& g, std::size_t source, HeapKind kind);

}  // namespace lheap
