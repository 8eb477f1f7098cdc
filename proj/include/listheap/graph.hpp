#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace lheap {

struct Arc {
  std::uint32_t target = 0;
  std::int64_t weight = 0;
};

struct Edge {
  std::uint32_t from = 0;
  std::uint32_t to = 0;
  std::int64_t weight = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Directed graph with nonnegative integer weights, stored as adjacency
/// lists. Vertices are 0-based here; DIMACS files use 1-based ids.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adjacency_(n) {}

  /// Throws Error(invalid_argument) for out-of-range vertices, self-loops or
  /// negative weights.
  void add_edge(std::size_t from, std::size_t to, std::int64_t weight);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }
  std::span<const Arc> out_arcs(std::size_t v) const { return adjacency_[v]; }
  std::vector<Edge> edges() const;

 private:
  std::vector<std::vector<Arc>> adjacency_;
  std::size_t edges_ = 0;
};

inline constexpr std::int64_t kMaxGeneratedWeight = 10000;

/// Strongly connected random graph: a random Hamiltonian cycle plus m-n
/// distinct extra edges, no self-loops, weights uniform in
/// [1, kMaxGeneratedWeight]. Requires 2 <= n and n <= m <= n(n-1).
Graph gen_graph(std::size_t n, std::size_t m, std::uint64_t seed);

// DIMACS shortest-path text format: "c" comment lines, one "p sp <n> <m>"
// problem line, then m "a <u> <v> <w>" arc lines with 1-based vertex ids.
Graph parse_dimacs(std::istream& in);
void format_dimacs(const Graph& g, std::ostream& out);
Graph read_dimacs(const std::string& path);
void write_dimacs(const Graph& g, const std::string& path);

}  // namespace lheap
