#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

#include "listheap/disorder.hpp"

namespace lheap {

enum class Order { random, increasing, decreasing, runs, sus };

/// `param` is the target run count for Order::runs and the target SUS for
/// Order::sus; ignored otherwise.
struct SequenceSpec {
  std::size_t n = 0;
  Order order = Order::random;
  std::size_t param = 0;
  std::uint64_t seed = 0;
};

/// Keys are a permutation of 1..n arranged per `spec.order`. Deterministic for
/// a fixed seed. The declared property is checked with the disorder measures
/// before returning. Throws Error(infeasible) for impossible specs.
KeySequence gen_sequence(const SequenceSpec& spec);

/// "random", "increasing", "decreasing", "runs:<r>" or "sus:<s>".
std::string order_label(const SequenceSpec& spec);

/// Parses an order label (as produced by order_label) into `order`/`param`.
/// Throws Error(invalid_argument) for unknown labels.
void parse_order_label(const std::string& label, SequenceSpec& spec);

// Sequence files: a header line "n=<count>" followed by one decimal key per
// line.
KeySequence parse_sequence(std::istream& in);
void format_sequence(std::span<const std::int64_t> keys, std::ostream& out);
KeySequence read_sequence_file(const std::string& path);
void write_sequence_file(const std::string& path, std::span<const std::int64_t> keys);

}  // namespace lheap
