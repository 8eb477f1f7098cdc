#include "listheap/listheap.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <variant>

#include "listheap/binary_heap.hpp"
#include "listheap/disorder.hpp"
#include "listheap/ea_heap.hpp"
#include "listheap/graph.hpp"
#include "listheap/ra_heap.hpp"
#include "listheap/runner.hpp"
#include "listheap/sequence.hpp"

using namespace lheap;

struct lh_heap {
  std::variant<RAListHeap<std::int64_t>, EAListHeap<std::int64_t>, BinaryHeap<std::int64_t>,
               RAListHeap<double>, EAListHeap<double>, BinaryHeap<double>>
      impl;
};

struct lh_graph {
  Graph graph;
};

namespace {

thread_local std::string last_error;

lh_status fail(lh_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

lh_status to_status(Errc code) {
  switch (code) {
    case Errc::empty_heap: return LH_ERR_EMPTY;
    case Errc::duplicate_key: return LH_ERR_DUPLICATE_KEY;
    case Errc::invalid_handle: return LH_ERR_INVALID_HANDLE;
    case Errc::key_increase: return LH_ERR_KEY_INCREASE;
    case Errc::invalid_argument: return LH_ERR_INVALID_ARGUMENT;
    case Errc::infeasible: return LH_ERR_INFEASIBLE;
    case Errc::parse: return LH_ERR_PARSE;
    case Errc::io: return LH_ERR_IO;
  }
  return LH_ERR_INTERNAL;
}

template <typename F>
lh_status guarded(F&& body) noexcept {
  try {
    return body();
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(LH_ERR_NO_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(LH_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LH_ERR_INTERNAL, "unknown exception");
  }
}

#define LH_REQUIRE(cond)                                                   \
  do {                                                                     \
    if (!(cond)) return fail(LH_ERR_INVALID_ARGUMENT, "null or invalid argument: " #cond); \
  } while (0)

template <typename Key, typename F>
lh_status with_key_kind(lh_heap* heap, F&& f) {
  return std::visit(
      [&](auto& h) -> lh_status {
        if constexpr (std::is_same_v<typename std::decay_t<decltype(h)>::key_type, Key>) {
          return f(h);
        } else {
          return fail(LH_ERR_KEY_KIND, "heap was created with the other key kind");
        }
      },
      heap->impl);
}

template <typename Key, typename F>
lh_status with_key_kind(const lh_heap* heap, F&& f) {
  return with_key_kind<Key>(const_cast<lh_heap*>(heap), std::forward<F>(f));
}

template <typename Key>
lh_status insert(lh_heap* heap, Key key, lh_handle* out) {
  LH_REQUIRE(heap);
  return guarded([&] {
    return with_key_kind<Key>(heap, [&](auto& h) {
      const NodeHandle handle = h.insert(key);
      if (out) *out = handle.packed();
      return LH_OK;
    });
  });
}

template <typename Key>
lh_status key_of(const lh_heap* heap, lh_handle handle, Key* out) {
  LH_REQUIRE(heap && out);
  return guarded([&] {
    return with_key_kind<Key>(heap, [&](auto& h) {
      *out = h.key(NodeHandle::unpack(handle));
      return LH_OK;
    });
  });
}

template <typename Key>
lh_status delete_min(lh_heap* heap, Key* key_out, lh_handle* handle_out) {
  LH_REQUIRE(heap);
  return guarded([&] {
    return with_key_kind<Key>(heap, [&](auto& h) {
      const auto [key, handle] = h.delete_min();
      if (key_out) *key_out = key;
      if (handle_out) *handle_out = handle.packed();
      return LH_OK;
    });
  });
}

template <typename Key>
lh_status decrease_key(lh_heap* heap, lh_handle handle, Key key) {
  LH_REQUIRE(heap);
  return guarded([&] {
    return with_key_kind<Key>(heap, [&](auto& h) {
      h.decrease_key(NodeHandle::unpack(handle), key);
      return LH_OK;
    });
  });
}

template <typename Seq>
void render_keys(std::ostream& os, const Seq& keys) {
  os << '[';
  bool first = true;
  for (const auto& k : keys) {
    if (!first) os << ' ';
    os << k;
    first = false;
  }
  os << ']';
}

void fill_stats(const RunStats& s, lh_run_stats* out) {
  if (!out) return;
  out->total_cmps = s.total_comparisons;
  out->max_delmin_cmps = s.max_delete_min_comparisons;
  out->delmin_cmps = s.delete_min_comparisons;
  out->has_final_k = s.final_lists.has_value() ? 1 : 0;
  out->final_k = s.final_lists.value_or(0);
  out->wall_ns = s.wall_ns;
  out->inserts = s.inserts;
  out->delete_mins = s.delete_mins;
  out->decrease_keys = s.decrease_keys;
}

HeapKind heap_kind_from(lh_heap_kind kind) {
  switch (kind) {
    case LH_HEAP_RA: return HeapKind::ra;
    case LH_HEAP_EA: return HeapKind::ea;
    case LH_HEAP_BINARY: return HeapKind::binary;
  }
  throw Error(Errc::invalid_argument, "unknown heap kind");
}

std::span<const std::int64_t> keys_view(const int64_t* keys, size_t n) { return {keys, n}; }

}  // namespace

extern "C" {

const char* lh_version(void) { return "1.0.0"; }

const char* lh_status_name(lh_status status) {
  switch (status) {
    case LH_OK: return "ok";
    case LH_ERR_EMPTY: return "empty heap";
    case LH_ERR_DUPLICATE_KEY: return "duplicate key";
    case LH_ERR_INVALID_HANDLE: return "invalid handle";
    case LH_ERR_KEY_INCREASE: return "key increase";
    case LH_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LH_ERR_KEY_KIND: return "key kind mismatch";
    case LH_ERR_INFEASIBLE: return "infeasible request";
    case LH_ERR_PARSE: return "parse error";
    case LH_ERR_IO: return "i/o error";
    case LH_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case LH_ERR_INVARIANT: return "invariant violated";
    case LH_ERR_NO_MEMORY: return "out of memory";
    case LH_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* lh_last_error(void) { return last_error.c_str(); }

lh_status lh_heap_create(lh_heap_kind kind, lh_key_kind key_kind, lh_heap** out) {
  LH_REQUIRE(out);
  if (key_kind != LH_KEY_I64 && key_kind != LH_KEY_F64) return fail(LH_ERR_INVALID_ARGUMENT, "unknown key kind");
  return guarded([&] {
    auto heap = std::make_unique<lh_heap>();
    const bool wide = key_kind == LH_KEY_I64;
    switch (kind) {
      case LH_HEAP_RA:
        if (wide) heap->impl.emplace<RAListHeap<std::int64_t>>(); else heap->impl.emplace<RAListHeap<double>>();
        break;
      case LH_HEAP_EA:
        if (wide) heap->impl.emplace<EAListHeap<std::int64_t>>(); else heap->impl.emplace<EAListHeap<double>>();
        break;
      case LH_HEAP_BINARY:
        if (wide) heap->impl.emplace<BinaryHeap<std::int64_t>>(); else heap->impl.emplace<BinaryHeap<double>>();
        break;
      default:
        return fail(LH_ERR_INVALID_ARGUMENT, "unknown heap kind");
    }
    *out = heap.release();
    return LH_OK;
  });
}

void lh_heap_destroy(lh_heap* heap) { delete heap; }

lh_status lh_heap_insert_i64(lh_heap* heap, int64_t key, lh_handle* out) { return insert<std::int64_t>(heap, key, out); }
lh_status lh_heap_insert_f64(lh_heap* heap, double key, lh_handle* out) { return insert<double>(heap, key, out); }

lh_status lh_heap_find_min(const lh_heap* heap, lh_handle* out) {
  LH_REQUIRE(heap && out);
  return guarded([&] {
    *out = std::visit([](const auto& h) { return h.find_min().packed(); }, heap->impl);
    return LH_OK;
  });
}

lh_status lh_heap_key_i64(const lh_heap* heap, lh_handle handle, int64_t* out) {
  return key_of<std::int64_t>(heap, handle, out);
}
lh_status lh_heap_key_f64(const lh_heap* heap, lh_handle handle, double* out) { return key_of<double>(heap, handle, out); }

lh_status lh_heap_delete_min_i64(lh_heap* heap, int64_t* key_out, lh_handle* handle_out) {
  return delete_min<std::int64_t>(heap, key_out, handle_out);
}
lh_status lh_heap_delete_min_f64(lh_heap* heap, double* key_out, lh_handle* handle_out) {
  return delete_min<double>(heap, key_out, handle_out);
}

lh_status lh_heap_decrease_key_i64(lh_heap* heap, lh_handle handle, int64_t key) {
  return decrease_key<std::int64_t>(heap, handle, key);
}
lh_status lh_heap_decrease_key_f64(lh_heap* heap, lh_handle handle, double key) {
  return decrease_key<double>(heap, handle, key);
}

size_t lh_heap_size(const lh_heap* heap) {
  if (!heap) return 0;
  return std::visit([](const auto& h) { return h.size(); }, heap->impl);
}

size_t lh_heap_list_count(const lh_heap* heap) {
  if (!heap) return 0;
  return std::visit(
      [](const auto& h) -> size_t {
        if constexpr (requires { h.list_count(); }) {
          return h.list_count();
        } else {
          return 0;
        }
      },
      heap->impl);
}

uint64_t lh_heap_comparisons(const lh_heap* heap) {
  if (!heap) return 0;
  return std::visit([](const auto& h) { return h.comparisons(); }, heap->impl);
}

void lh_heap_reset_comparisons(lh_heap* heap) {
  if (heap) std::visit([](auto& h) { h.reset_comparisons(); }, heap->impl);
}

lh_status lh_heap_validate(const lh_heap* heap) {
  LH_REQUIRE(heap);
  return guarded([&] {
    auto violation = std::visit([](const auto& h) { return h.find_violation(); }, heap->impl);
    if (violation) return fail(LH_ERR_INVARIANT, *violation);
    return LH_OK;
  });
}

lh_status lh_heap_describe(const lh_heap* heap, char* buf, size_t cap, size_t* needed) {
  LH_REQUIRE(heap && (buf || cap == 0));
  return guarded([&] {
    std::ostringstream os;
    std::visit(
        [&](const auto& h) {
          if constexpr (requires { h.lists(); }) {
            bool first = true;
            for (const auto& list : h.lists()) {
              if (!first) os << ' ';
              render_keys(os, list);
              first = false;
            }
          } else {
            if (!h.empty()) render_keys(os, h.keys());
          }
        },
        heap->impl);
    const std::string text = os.str();
    if (needed) *needed = text.size() + 1;
    if (cap < text.size() + 1) return fail(LH_ERR_BUFFER_TOO_SMALL, "describe buffer too small");
    std::memcpy(buf, text.c_str(), text.size() + 1);
    return LH_OK;
  });
}

lh_status lh_runs_count(const int64_t* keys, size_t n, size_t* out) {
  LH_REQUIRE((keys || n == 0) && out);
  return guarded([&] {
    *out = runs_count(keys_view(keys, n));
    return LH_OK;
  });
}

lh_status lh_sus_count(const int64_t* keys, size_t n, size_t* out) {
  LH_REQUIRE((keys || n == 0) && out);
  return guarded([&] {
    *out = sus_count(keys_view(keys, n));
    return LH_OK;
  });
}

lh_status lh_enc_count(const int64_t* keys, size_t n, size_t* out) {
  LH_REQUIRE((keys || n == 0) && out);
  return guarded([&] {
    *out = enc_count(keys_view(keys, n));
    return LH_OK;
  });
}

lh_status lh_runs_partition(const int64_t* keys, size_t n, size_t* run_lengths, size_t* count) {
  LH_REQUIRE((keys || n == 0) && (run_lengths || n == 0) && count);
  return guarded([&] {
    const Partition parts = runs_partition(keys_view(keys, n));
    for (size_t i = 0; i < parts.size(); ++i) run_lengths[i] = parts[i].size();
    *count = parts.size();
    return LH_OK;
  });
}

lh_status lh_enc_build(const int64_t* keys, size_t n, int64_t* flat, size_t* lengths, size_t* count) {
  LH_REQUIRE((keys || n == 0) && (flat || n == 0) && (lengths || n == 0) && count);
  return guarded([&] {
    const EncroachingSet enc = enc_build(keys_view(keys, n));
    size_t at = 0;
    for (size_t i = 0; i < enc.sequences.size(); ++i) {
      lengths[i] = enc.sequences[i].size();
      for (std::int64_t k : enc.sequences[i]) flat[at++] = k;
    }
    *count = enc.size();
    return LH_OK;
  });
}

lh_status lh_melsort(const int64_t* keys, size_t n, int64_t* out) {
  LH_REQUIRE((keys || n == 0) && (out || n == 0));
  return guarded([&] {
    const KeySequence sorted = melsort(keys_view(keys, n));
    std::copy(sorted.begin(), sorted.end(), out);
    return LH_OK;
  });
}

lh_status lh_gen_sequence(size_t n, lh_order order, size_t param, uint64_t seed, int64_t* out) {
  LH_REQUIRE(out || n == 0);
  return guarded([&] {
    SequenceSpec spec{n, Order::random, param, seed};
    switch (order) {
      case LH_ORDER_RANDOM: spec.order = Order::random; break;
      case LH_ORDER_INCREASING: spec.order = Order::increasing; break;
      case LH_ORDER_DECREASING: spec.order = Order::decreasing; break;
      case LH_ORDER_RUNS: spec.order = Order::runs; break;
      case LH_ORDER_SUS: spec.order = Order::sus; break;
      default: return fail(LH_ERR_INVALID_ARGUMENT, "unknown order");
    }
    const KeySequence keys = gen_sequence(spec);
    std::copy(keys.begin(), keys.end(), out);
    return LH_OK;
  });
}

lh_status lh_sequence_read(const char* path, int64_t** keys, size_t* n) {
  LH_REQUIRE(path && keys && n);
  return guarded([&] {
    const KeySequence seq = read_sequence_file(path);
    auto* buf = static_cast<int64_t*>(std::malloc(std::max<size_t>(1, seq.size()) * sizeof(int64_t)));
    if (!buf) return fail(LH_ERR_NO_MEMORY, "out of memory");
    std::copy(seq.begin(), seq.end(), buf);
    *keys = buf;
    *n = seq.size();
    return LH_OK;
  });
}

lh_status lh_sequence_write(const char* path, const int64_t* keys, size_t n) {
  LH_REQUIRE(path && (keys || n == 0));
  return guarded([&] {
    write_sequence_file(path, keys_view(keys, n));
    return LH_OK;
  });
}

void lh_free(void* p) { std::free(p); }

lh_status lh_graph_generate(size_t n, size_t m, uint64_t seed, lh_graph** out) {
  LH_REQUIRE(out);
  return guarded([&] {
    *out = new lh_graph{gen_graph(n, m, seed)};
    return LH_OK;
  });
}

lh_status lh_graph_read_dimacs(const char* path, lh_graph** out) {
  LH_REQUIRE(path && out);
  return guarded([&] {
    *out = new lh_graph{read_dimacs(path)};
    return LH_OK;
  });
}

lh_status lh_graph_write_dimacs(const lh_graph* graph, const char* path) {
  LH_REQUIRE(graph && path);
  return guarded([&] {
    write_dimacs(graph->graph, path);
    return LH_OK;
  });
}

void lh_graph_destroy(lh_graph* graph) { delete graph; }

size_t lh_graph_vertex_count(const lh_graph* graph) { return graph ? graph->graph.vertex_count() : 0; }
size_t lh_graph_edge_count(const lh_graph* graph) { return graph ? graph->graph.edge_count() : 0; }

lh_status lh_run_sort(lh_heap_kind kind, const int64_t* keys, size_t n, int64_t* sorted_out, lh_run_stats* stats) {
  LH_REQUIRE(keys || n == 0);
  return guarded([&] {
    std::vector<std::int64_t> sorted;
    const RunStats s = run_sort(heap_kind_from(kind), keys_view(keys, n), sorted_out ? &sorted : nullptr);
    if (sorted_out) std::copy(sorted.begin(), sorted.end(), sorted_out);
    fill_stats(s, stats);
    return LH_OK;
  });
}

lh_status lh_run_dijkstra(const lh_graph* graph, size_t source, lh_heap_kind kind, int64_t* dist_out,
                          lh_run_stats* stats) {
  LH_REQUIRE(graph);
  return guarded([&] {
    const DijkstraRun run = run_dijkstra(graph->graph, source, heap_kind_from(kind));
    if (dist_out) std::copy(run.result.dist.begin(), run.result.dist.end(), dist_out);
    fill_stats(run.stats, stats);
    return LH_OK;
  });
}

}  // extern "C"
