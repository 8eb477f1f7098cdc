// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "listheap/adaptivity.hpp"
#include "listheap/binary_heap.hpp"
#include "listheap/dijkstra.hpp"
#include "listheap/disorder.hpp"
#include "listheap/ea_heap.hpp"
#include "listheap/graph.hpp"
#include "listheap/ra_heap.hpp"
#include "listheap/runner.hpp"
#include "listheap/sequence.hpp"
#include "oracles.hpp"
#include "sample.hpp"

using namespace lheap;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, const char* name, double limit_ms, const std::function<Outcome()>& body) {
  Outcome out;
  const auto t0 = Clock::now();
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double ms = ms_since(t0);
  if (limit_ms > 0 && ms > limit_ms) {
    out.ok = false;
    out.detail += "; over time limit " + std::to_string(limit_ms) + " ms";
  }
  if (!out.ok) ++failures;
  std::printf("%s  %2d  %-44s %s (%.3f ms)\n", out.ok ? "PASS" : "FAIL", id, name, out.detail.c_str(), ms);
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

template <typename Heap>
std::uint64_t drain_max_delete_min(Heap& h) {
  std::uint64_t worst = 0;
  std::int64_t last = std::numeric_limits<std::int64_t>::min();
  while (!h.empty()) {
    const auto before = h.comparisons();
    const std::int64_t k = h.delete_min().first;
    if (k <= last) throw std::logic_error("drain out of order");
    last = k;
    worst = std::max(worst, h.comparisons() - before);
  }
  return worst;
}

Outcome golden_ra() {
  const auto t0 = Clock::now();
  RAListHeap<std::int64_t> h;
  for (auto k : sample::kKeys) h.insert(k);
  const auto lists = h.lists();
  const double ms = ms_since(t0);
  const bool ok = lists == sample::kRaLists && ms < 1.0;
  return {ok, fmt("7 lists exact=%s, build %.4f ms", lists == sample::kRaLists ? "yes" : "no", ms)};
}

Outcome golden_ea() {
  const auto t0 = Clock::now();
  EAListHeap<std::int64_t> h;
  for (auto k : sample::kKeys) h.insert(k);
  const auto lists = h.lists();
  const double ms = ms_since(t0);
  const bool ok = lists == sample::kEaLists && ms < 1.0;
  return {ok, fmt("5 lists exact=%s, build %.4f ms", lists == sample::kEaLists ? "yes" : "no", ms)};
}

Outcome sample_measures() {
  const auto r = runs_count(sample::kKeys);
  const auto s = sus_count(sample::kKeys);
  const auto e = enc_count(sample::kKeys);
  return {r == 8 && s == 7 && e == 5, fmt("runs=%zu SUS=%zu Enc=%zu", r, s, e)};
}

Outcome ra_list_bound() {
  std::mt19937_64 rng(101);
  constexpr int kTrials = 10000;
  int good = 0;
  for (int t = 0; t < kTrials; ++t) {
    const auto xs = oracle::random_unique(1 + rng() % 512, rng);
    const auto c = ra_list_count_bound_check(xs);
    if (c.lists <= c.runs && c.runs == runs_count(xs)) ++good;
  }
  std::vector<std::int64_t> inc(512);
  std::iota(inc.begin(), inc.end(), 1);
  auto dec = inc;
  std::reverse(dec.begin(), dec.end());
  const auto d = ra_list_count_bound_check(dec);
  const auto i = ra_list_count_bound_check(inc);
  const bool ok = good == kTrials && d.lists == 1 && i.lists == inc.size();
  return {ok, fmt("%d/%d trials k<=runs; decreasing k=%zu; increasing k=%zu (n=512)", good, kTrials, d.lists, i.lists)};
}

Outcome ea_encroaching() {
  std::mt19937_64 rng(202);
  constexpr int kTrials = 10000;
  int good = 0;
  for (int t = 0; t < kTrials; ++t) {
    const auto xs = oracle::random_unique(1 + rng() % 512, rng);
    EAListHeap<std::int64_t> h;
    for (auto x : xs) h.insert(x);
    const auto lists = h.lists();
    bool ok = lists.size() == oracle::encroaching_by_scan(xs).size();
    for (std::size_t j = 0; ok && j + 1 < lists.size(); ++j) {
      ok = lists[j].front() < lists[j + 1].front() && lists[j].back() > lists[j + 1].back();
    }
    if (ok) ++good;
  }
  return {good == kTrials, fmt("%d/%d trials encroaching with k = Enc", good, kTrials)};
}

Outcome sus_oracles() {
  std::size_t perms = 0, perm_good = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    std::vector<std::int64_t> xs(n);
    std::iota(xs.begin(), xs.end(), 1);
    do {
      ++perms;
      if (sus_count(xs) == oracle::min_increasing_partition(xs)) ++perm_good;
    } while (std::next_permutation(xs.begin(), xs.end()));
  }
  std::mt19937_64 rng(303);
  int rand_good = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto xs = oracle::random_unique(1 + rng() % 512, rng);
    if (sus_count(xs) == oracle::longest_decreasing(xs)) ++rand_good;
  }
  return {perm_good == perms && rand_good == 1000,
          fmt("%zu/%zu permutations (n<=7), %d/1000 random vs LDS", perm_good, perms, rand_good)};
}

Outcome ea_vs_binary_large() {
  const auto xs = gen_sequence({1'000'000, Order::random, 0, 404});
  const auto sus = sus_count(xs);
  EAListHeap<std::int64_t> ea;
  for (auto x : xs) ea.insert(x);
  const std::size_t k = ea.list_count();
  const auto ea_max = drain_max_delete_min(ea);
  BinaryHeap<std::int64_t> bin;
  for (auto x : xs) bin.insert(x);
  const auto bin_max = drain_max_delete_min(bin);
  const bool ok = k <= sus && static_cast<double>(ea_max) <= 0.75 * static_cast<double>(bin_max);
  return {ok, fmt("k=%zu SUS=%zu; max delete_min cmps EA=%llu binary=%llu (ratio %.3f)", k, sus,
                  static_cast<unsigned long long>(ea_max), static_cast<unsigned long long>(bin_max),
                  static_cast<double>(ea_max) / static_cast<double>(bin_max))};
}

Outcome sorted_separation() {
  const auto xs = gen_sequence({100'000, Order::decreasing, 0, 0});
  const RunStats ra = run_sort(HeapKind::ra, xs);
  const RunStats bin = run_sort(HeapKind::binary, xs);
  const double ratio = static_cast<double>(bin.total_comparisons) / static_cast<double>(ra.total_comparisons);
  return {ra.total_comparisons * 5 <= bin.total_comparisons,
          fmt("RA=%llu binary=%llu cmps (binary/RA %.2fx); wall RA %.2f ms binary %.2f ms",
              static_cast<unsigned long long>(ra.total_comparisons),
              static_cast<unsigned long long>(bin.total_comparisons), ratio, ra.wall_ns / 1e6, bin.wall_ns / 1e6)};
}

Outcome dijkstra_agreement() {
  std::mt19937_64 rng(505);
  int agree = 0, bf_checked = 0, bf_agree = 0;
  for (int g_id = 0; g_id < 50; ++g_id) {
    // Alternate small graphs (checked against Bellman-Ford) and large ones.
    const std::size_t n = g_id % 2 == 0 ? 2 + rng() % 999 : 1001 + rng() % 9000;
    const std::size_t m = std::min({n + rng() % (3 * n + 1), std::size_t{40'000}, n * (n - 1)});
    const Graph g = gen_graph(n, std::max(m, n), rng());
    const std::size_t s = rng() % n;
    const auto ra = dijkstra(g, s, HeapKind::ra).dist;
    const auto ea = dijkstra(g, s, HeapKind::ea).dist;
    const auto bin = dijkstra(g, s, HeapKind::binary).dist;
    if (ra == ea && ea == bin) ++agree;
    if (n <= 1000) {
      ++bf_checked;
      if (bin == oracle::bellman_ford(g, s)) ++bf_agree;
    }
  }
  return {agree == 50 && bf_agree == bf_checked,
          fmt("%d/50 graphs agree across heaps; %d/%d match Bellman-Ford", agree, bf_agree, bf_checked)};
}

Outcome random_sus_scaling() {
  constexpr std::size_t n = 1'000'000;
  double sum = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto xs = gen_sequence({n, Order::random, 0, 6000 + seed});
    sum += static_cast<double>(sus_count(xs)) / std::sqrt(static_cast<double>(n));
  }
  const double mean = sum / 20;
  return {mean >= 1.8 && mean <= 2.2, fmt("mean SUS/sqrt(n) = %.4f over 20 permutations", mean)};
}

template <typename Heap>
std::string mixed_workload(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Heap h;
  std::map<std::int64_t, NodeHandle> ref;  // key -> handle, ordered like the heap
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int op = 0; op < 100'000; ++op) {
    const double r = u(rng);
    if (r < 0.35 || ref.empty()) {
      const auto k = static_cast<std::int64_t>(rng() % 1'000'000'000);
      if (ref.count(k)) continue;
      ref.emplace(k, h.insert(k));
    } else if (r < 0.70) {
      const NodeHandle top = h.find_min();
      if (top != ref.begin()->second || h.key(top) != ref.begin()->first) return fmt("find_min mismatch at op %d", op);
      const auto [k, handle] = h.delete_min();
      if (k != ref.begin()->first || handle != ref.begin()->second) return fmt("delete_min mismatch at op %d", op);
      ref.erase(ref.begin());
    } else {
      auto it = std::next(ref.begin(), static_cast<long>(rng() % ref.size()));
      const std::int64_t nk = it->first - 1 - static_cast<std::int64_t>(rng() % 100'000);
      if (ref.count(nk)) continue;
      const NodeHandle handle = it->second;
      h.decrease_key(handle, nk);
      ref.erase(it);
      ref.emplace(nk, handle);
    }
    if (h.size() != ref.size()) return fmt("size mismatch at op %d", op);
    if (auto v = h.find_violation()) return fmt("op %d: %s", op, v->c_str());
    if (!ref.empty() && h.find_min() != ref.begin()->second) return fmt("find_min mismatch at op %d", op);
  }
  for (const auto& [k, handle] : ref) {
    if (!h.contains(handle) || h.key(handle) != k) return "handle lookup mismatch";
  }
  return {};
}

Outcome invariant_suite() {
  const std::string ra = mixed_workload<RAListHeap<std::int64_t>>(11);
  const std::string ea = mixed_workload<EAListHeap<std::int64_t>>(12);
  const std::string bin = mixed_workload<BinaryHeap<std::int64_t>>(13);
  const bool ok = ra.empty() && ea.empty() && bin.empty();
  if (ok) return {true, "1e5 ops per heap (ra, ea, binary) agree with reference, invariants clean"};
  return {false, "ra: " + (ra.empty() ? std::string("ok") : ra) + "; ea: " + (ea.empty() ? std::string("ok") : ea) +
                     "; binary: " + (bin.empty() ? std::string("ok") : bin)};
}

}  // namespace

int main() {
  report(1, "golden runs-adaptive layout", 0, golden_ra);
  report(2, "golden Enc-adaptive encroaching set", 0, golden_ea);
  report(3, "disorder measures on the sample", 0, sample_measures);
  report(4, "runs-adaptive list count <= runs", 30'000, ra_list_bound);
  report(5, "Enc-adaptive lists form an optimal set", 30'000, ea_encroaching);
  report(6, "greedy SUS matches exhaustive and LDS", 0, sus_oracles);
  report(7, "EA k <= SUS, delete_min <= 0.75 binary", 60'000, ea_vs_binary_large);
  report(8, "decreasing input: RA <= binary / 5", 0, sorted_separation);
  report(9, "Dijkstra distances agree", 0, dijkstra_agreement);
  report(10, "random SUS / sqrt(n) in [1.8, 2.2]", 60'000, random_sus_scaling);
  report(11, "mixed workload invariants", 0, invariant_suite);
  std::printf("%s: %d of 11 criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
