#pragma once

#include <optional>
#include <string_view>

namespace lheap {

enum class HeapKind { ra, ea, binary };

inline constexpr HeapKind kAllHeapKinds[] = {HeapKind::ra, HeapKind::ea, HeapKind::binary};

constexpr std::string_view heap_kind_name(HeapKind kind) {
  switch (kind) {
    case HeapKind::ra: return "ra";
    case HeapKind::ea: return "ea";
    case HeapKind::binary: return "binary";
  }
  return "?";
}

constexpr std::optional<HeapKind> parse_heap_kind(std::string_view name) {
  for (HeapKind k : kAllHeapKinds) {
    if (heap_kind_name(k) == name) return k;
  }
  return std::nullopt;
}

}  // namespace lheap
