#pragma once

#include <cstdint>
#include <functional>

namespace lheap {

/// Stable reference to an item stored in a heap. The generation tag makes a
/// handle to a deleted item detectable even after its slot is reused.
struct NodeHandle {
  std::uint32_t index = 0;
  std::uint32_t generation = 0;

  friend bool operator==(const NodeHandle&, const NodeHandle&) = default;

  std::uint64_t packed() const noexcept {
    return (static_cast<std::uint64_t>(generation) << 32) | index;
  }
  static NodeHandle unpack(std::uint64_t v) noexcept {
    return {static_cast<std::uint32_t>(v & 0xffffffffu), static_cast<std::uint32_t>(v >> 32)};
  }
};

}  // namespace lheap

template <>
struct std::hash<lheap::NodeHandle> {
  std::size_t operator()(const lheap::NodeHandle& h) const noexcept {
    return std::hash<std::uint64_t>{}(h.packed());
  }
};
