#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace lheap {

struct ListCountCheck {
  std::size_t lists = 0;  // list count after inserting every key
  std::size_t runs = 0;   // runs of the same keys
};

/// Inserts `xs` into a fresh runs-adaptive heap. An insert-only history never
/// yields more lists than runs, so lists <= runs always holds.
ListCountCheck ra_list_count_bound_check(std::span<const std::int64_t> xs);

struct EncroachingCheck {
  std::size_t lists = 0;     // list count of the Enc-adaptive heap
  std::size_t enc = 0;       // melsort's sequence count
  bool encroaching = false;  // heap lists form an encroaching set in array order
};

/// Inserts `xs` into a fresh Enc-adaptive heap and compares its lists with
/// melsort's encroaching set for the same keys.
EncroachingCheck ea_encroaching_check(std::span<const std::int64_t> xs);

}  // namespace lheap
