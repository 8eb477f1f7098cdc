#pragma once

// Presortedness measures over sequences of unique 64-bit keys: runs (maximal
// consecutive decreasing stretches), SUS (fewest increasing subsequences that
// partition the input) and Enc (size of melsort's encroaching set).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lheap {

using KeySequence = std::vector<std::int64_t>;

struct IndexedKey {
  std::size_t index = 0;
  std::int64_t key = 0;

  friend bool operator==(const IndexedKey&, const IndexedKey&) = default;
};

/// Disjoint subsequences whose union is the input.
using Partition = std::vector<std::vector<IndexedKey>>;

/// Increasing sequences with strictly increasing heads and strictly
/// decreasing tails, so each nests inside its predecessor.
struct EncroachingSet {
  std::vector<std::vector<std::int64_t>> sequences;

  std::size_t size() const noexcept { return sequences.size(); }
  bool is_encroaching() const noexcept;
};

/// Throws Error(duplicate_key) if any key repeats.
void require_unique(std::span<const std::int64_t> xs);

Partition runs_partition(std::span<const std::int64_t> xs);
std::size_t runs_count(std::span<const std::int64_t> xs);

/// Greedy: each key extends the subsequence with the largest tail below it.
/// Equals the length of the longest strictly decreasing subsequence.
std::size_t sus_count(std::span<const std::int64_t> xs);

/// List-building phase of melsort. Each key goes to the front of the oldest
/// sequence whose head exceeds it, else to the back of the oldest sequence
/// whose tail is below it, else starts a new sequence.
EncroachingSet enc_build(std::span<const std::int64_t> xs);
std::size_t enc_count(std::span<const std::int64_t> xs);

/// enc_build followed by a k-way merge.
KeySequence melsort(std::span<const std::int64_t> xs);

}  // namespace lheap
