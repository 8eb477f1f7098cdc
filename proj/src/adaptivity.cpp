#include "listheap/adaptivity.hpp"

#include "listheap/disorder.hpp"
#include "listheap/ea_heap.hpp"
#include "listheap/ra_heap.hpp"

namespace lheap {

ListCountCheck ra_list_count_bound_check(std::span<const std::int64_t> xs) {
  const std::size_t runs = runs_count(xs);
  RAListHeap<std::int64_t> heap;
  for (std::int64_t x : xs) heap.insert(x);
  return {heap.list_count(), runs};
}

EncroachingCheck ea_encroaching_check(std::span<const std::int64_t> xs) {
  const std::size_t enc = enc_count(xs);
  EAListHeap<std::int64_t> heap;
  for (std::int64_t x : xs) heap.insert(x);
  const EncroachingSet as_set{heap.lists()};
  return {heap.list_count(), enc, as_set.is_encroaching()};
}

}  // namespace lheap
