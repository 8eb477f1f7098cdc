#include "listheap/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_set>

#include "listheap/error.hpp"

namespace lheap {

void Graph::add_edge(std::size_t from, std::size_t to, std::int64_t weight) {
  if (from >= adjacency_.size() || to >= adjacency_.size()) {
    throw Error(Errc::invalid_argument, "edge endpoint out of range");
  }
  if (from == to) throw Error(Errc::invalid_argument, "self-loop on vertex " + std::to_string(from));
  if (weight < 0) throw Error(Errc::invalid_argument, "negative edge weight");
  adjacency_[from].push_back({static_cast<std::uint32_t>(to), weight});
  ++edges_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (const Arc& a : adjacency_[u]) out.push_back({static_cast<std::uint32_t>(u), a.target, a.weight});
  }
  return out;
}

Graph gen_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 2) throw Error(Errc::infeasible, "a strongly connected graph without self-loops needs n >= 2");
  if (m < n) throw Error(Errc::infeasible, "m < n: cannot embed a Hamiltonian cycle");
  if (n > 0xffffffffu) throw Error(Errc::infeasible, "too many vertices");
  const std::uint64_t max_edges = static_cast<std::uint64_t>(n) * (n - 1);
  if (m > max_edges) throw Error(Errc::infeasible, "m exceeds n(n-1)");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> weight(1, kMaxGeneratedWeight);
  Graph g(n);
  std::unordered_set<std::uint64_t> present;
  present.reserve(m);
  auto add = [&](std::size_t u, std::size_t v) {
    g.add_edge(u, v, weight(rng));
    present.insert(static_cast<std::uint64_t>(u) * n + v);
  };

  std::vector<std::size_t> cycle(n);
  std::iota(cycle.begin(), cycle.end(), std::size_t{0});
  std::shuffle(cycle.begin(), cycle.end(), rng);
  for (std::size_t i = 0; i < n; ++i) add(cycle[i], cycle[(i + 1) % n]);

  const std::size_t extra = m - n;
  if (extra * 2 <= max_edges - n) {
    std::uniform_int_distribution<std::size_t> vertex(0, n - 1);
    while (g.edge_count() < m) {
      const std::size_t u = vertex(rng);
      const std::size_t v = vertex(rng);
      if (u == v || present.contains(static_cast<std::uint64_t>(u) * n + v)) continue;
      add(u, v);
    }
  } else {
    // Dense request: sample from the explicit list of free pairs.
    std::vector<std::pair<std::size_t, std::size_t>> free_pairs;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        if (u != v && !present.contains(static_cast<std::uint64_t>(u) * n + v)) free_pairs.emplace_back(u, v);
      }
    }
    std::shuffle(free_pairs.begin(), free_pairs.end(), rng);
    for (std::size_t i = 0; i < extra; ++i) add(free_pairs[i].first, free_pairs[i].second);
  }
  return g;
}

namespace {

[[noreturn]] void malformed(std::size_t line, const std::string& why) {
  throw Error(Errc::parse, "line " + std::to_string(line) + ": " + why);
}

}  // namespace

Graph parse_dimacs(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_problem = false;
  std::size_t declared_arcs = 0;
  Graph g;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag == "c") continue;
    if (tag == "p") {
      if (have_problem) malformed(line_no, "duplicate problem line");
      std::string kind;
      long long n = -1;
      long long m = -1;
      if (!(fields >> kind >> n >> m) || kind != "sp" || n < 0 || m < 0) {
        malformed(line_no, "expected 'p sp <n> <m>'");
      }
      std::string rest;
      if (fields >> rest) malformed(line_no, "trailing fields on problem line");
      g = Graph(static_cast<std::size_t>(n));
      declared_arcs = static_cast<std::size_t>(m);
      have_problem = true;
    } else if (tag == "a") {
      if (!have_problem) malformed(line_no, "arc before problem line");
      long long u = 0;
      long long v = 0;
      long long w = 0;
      if (!(fields >> u >> v >> w)) malformed(line_no, "expected 'a <u> <v> <w>'");
      std::string rest;
      if (fields >> rest) malformed(line_no, "trailing fields on arc line");
      const auto n = static_cast<long long>(g.vertex_count());
      if (u < 1 || u > n || v < 1 || v > n) malformed(line_no, "vertex out of range");
      if (u == v) malformed(line_no, "self-loop");
      if (w < 0) malformed(line_no, "negative weight");
      g.add_edge(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1), w);
    } else {
      malformed(line_no, "unknown line type '" + tag + "'");
    }
  }
  if (!have_problem) throw Error(Errc::parse, "missing problem line 'p sp <n> <m>'");
  if (g.edge_count() != declared_arcs) {
    throw Error(Errc::parse, "problem line declares " + std::to_string(declared_arcs) + " arcs but file has " +
                                 std::to_string(g.edge_count()));
  }
  return g;
}

void format_dimacs(const Graph& g, std::ostream& out) {
  out << "p sp " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    for (const Arc& a : g.out_arcs(u)) out << "a " << u + 1 << ' ' << a.target + 1 << ' ' << a.weight << '\n';
  }
}

Graph read_dimacs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot open " + path);
  return parse_dimacs(in);
}

void write_dimacs(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::io, "cannot open " + path + " for writing");
  format_dimacs(g, out);
  if (!out) throw Error(Errc::io, "write to " + path + " failed");
}

}  // namespace lheap
