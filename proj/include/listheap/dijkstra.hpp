#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "listheap/error.hpp"
#include "listheap/graph.hpp"
#include "listheap/handle.hpp"
#include "listheap/heap_kind.hpp"

namespace lheap {

inline constexpr std::int64_t kUnreachable = -1;

struct ShortestPathResult {
  std::size_t source = 0;
  std::vector<std::int64_t> dist;  // kUnreachable for vertices never reached
  std::vector<std::uint32_t> settled_order;
};

struct DijkstraCounters {
  std::uint64_t inserts = 0;
  std::uint64_t delete_mins = 0;
  std::uint64_t decrease_keys = 0;
  std::uint64_t max_delete_min_comparisons = 0;
  std::uint64_t delete_min_comparisons = 0;
  std::size_t peak_lists = 0;
};

/// Dijkstra with lazy discovery: a vertex is inserted the first time it is
/// reached and lowered with decrease_key afterwards. Heap keys are
/// dist * n + vertex, which keeps them unique and breaks distance ties by
/// vertex id.
template <typename Heap>
ShortestPathResult dijkstra(const Graph& g, std::size_t source, Heap& heap, DijkstraCounters* counters = nullptr) {
  const std::size_t n = g.vertex_count();
  if (source >= n) throw Error(Errc::invalid_argument, "source vertex " + std::to_string(source) + " out of range");
  const auto width = static_cast<std::int64_t>(n);
  const std::int64_t max_dist = (std::numeric_limits<std::int64_t>::max() - (width - 1)) / width;
  auto encode = [&](std::int64_t d, std::size_t v) {
    if (d > max_dist) throw Error(Errc::infeasible, "path length overflows the heap key range");
    return d * width + static_cast<std::int64_t>(v);
  };

  enum : unsigned char { kUnseen, kQueued, kSettled };
  ShortestPathResult out;
  out.source = source;
  out.dist.assign(n, kUnreachable);
  out.settled_order.reserve(n);
  std::vector<unsigned char> state(n, kUnseen);
  std::vector<NodeHandle> where(n);
  DijkstraCounters local;
  auto track_lists = [&] {
    if constexpr (requires { heap.list_count(); }) {
      local.peak_lists = std::max(local.peak_lists, heap.list_count());
    }
  };

  out.dist[source] = 0;
  where[source] = heap.insert(encode(0, source));
  state[source] = kQueued;
  ++local.inserts;
  track_lists();

  while (!heap.empty()) {
    const std::uint64_t before = heap.comparisons();
    const auto [key, handle] = heap.delete_min();
    const std::uint64_t spent = heap.comparisons() - before;
    local.max_delete_min_comparisons = std::max(local.max_delete_min_comparisons, spent);
    local.delete_min_comparisons += spent;
    ++local.delete_mins;
    const auto u = static_cast<std::size_t>(key % width);
    state[u] = kSettled;
    out.settled_order.push_back(static_cast<std::uint32_t>(u));

    for (const Arc& arc : g.out_arcs(u)) {
      const std::size_t v = arc.target;
      if (state[v] == kSettled) continue;
      const std::int64_t candidate = out.dist[u] + arc.weight;
      if (state[v] == kUnseen) {
        out.dist[v] = candidate;
        where[v] = heap.insert(encode(candidate, v));
        state[v] = kQueued;
        ++local.inserts;
      } else if (candidate < out.dist[v]) {
        out.dist[v] = candidate;
        heap.decrease_key(where[v], encode(candidate, v));
        ++local.decrease_keys;
      }
      track_lists();
    }
  }
  if (counters) *counters = local;
  return out;
}

/// Runs Dijkstra on a fresh 64-bit-key heap of the given kind.
ShortestPathResult dijkstra(const Graph& g, std::size_t source, HeapKind kind, DijkstraCounters* counters = nullptr);

}  // namespace lheap
