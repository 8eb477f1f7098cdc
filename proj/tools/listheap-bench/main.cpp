// listheap-bench: sorting and Dijkstra experiments over the List Heaps and the
// binary heap baseline, disorder measurement, and step-by-step heap traces.
// Talks to the library exclusively through the C interface.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "listheap/listheap.h"
#include "report.hpp"

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(lh_status st, const std::string& what) {
  if (st != LH_OK) throw Failure(what + ": " + lh_status_name(st) + ": " + lh_last_error());
}

struct HeapDeleter {
  void operator()(lh_heap* h) const { lh_heap_destroy(h); }
};
struct GraphDeleter {
  void operator()(lh_graph* g) const { lh_graph_destroy(g); }
};
using HeapPtr = std::unique_ptr<lh_heap, HeapDeleter>;
using GraphPtr = std::unique_ptr<lh_graph, GraphDeleter>;

const std::map<std::string, lh_heap_kind> kHeapNames{
    {"ra", LH_HEAP_RA}, {"ea", LH_HEAP_EA}, {"binary", LH_HEAP_BINARY}};

std::vector<std::pair<std::string, lh_heap_kind>> selected_heaps(const std::string& heap) {
  if (heap == "all") return {{"ra", LH_HEAP_RA}, {"ea", LH_HEAP_EA}, {"binary", LH_HEAP_BINARY}};
  return {{heap, kHeapNames.at(heap)}};
}

struct OrderSpec {
  lh_order order = LH_ORDER_RANDOM;
  std::size_t param = 0;
  std::string label;
};

OrderSpec parse_order(const std::string& label) {
  OrderSpec o{LH_ORDER_RANDOM, 0, label};
  auto param = [&](std::size_t prefix) {
    const std::string rest = label.substr(prefix);
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos) {
      throw CLI::ValidationError("--order", "bad parameter in '" + label + "'");
    }
    return static_cast<std::size_t>(std::stoull(rest));
  };
  if (label == "random") {
    o.order = LH_ORDER_RANDOM;
  } else if (label == "increasing") {
    o.order = LH_ORDER_INCREASING;
  } else if (label == "decreasing") {
    o.order = LH_ORDER_DECREASING;
  } else if (label.rfind("runs:", 0) == 0) {
    o.order = LH_ORDER_RUNS;
    o.param = param(5);
  } else if (label.rfind("sus:", 0) == 0) {
    o.order = LH_ORDER_SUS;
    o.param = param(4);
  } else {
    throw CLI::ValidationError("--order", "unknown order '" + label + "'");
  }
  return o;
}

std::vector<std::int64_t> generate(std::size_t n, const OrderSpec& o, std::uint64_t seed) {
  std::vector<std::int64_t> keys(n);
  check(lh_gen_sequence(n, o.order, o.param, seed, keys.data()), "generating " + o.label + " sequence");
  return keys;
}

std::vector<std::int64_t> read_sequence(const std::string& path) {
  std::int64_t* raw = nullptr;
  std::size_t n = 0;
  check(lh_sequence_read(path.c_str(), &raw, &n), "reading " + path);
  std::vector<std::int64_t> keys(raw, raw + n);
  lh_free(raw);
  return keys;
}

std::string basename_of(const std::string& path) {
  const auto slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

bench::RunRecord make_record(const std::string& heap, const std::string& workload, std::uint64_t n, std::uint64_t m,
                             std::uint64_t seed, const lh_run_stats& s) {
  bench::RunRecord r;
  r.heap = heap;
  r.workload = workload;
  r.n = n;
  r.m = m;
  r.seed = seed;
  r.total_cmps = s.total_cmps;
  r.max_delmin_cmps = s.max_delmin_cmps;
  r.delmin_cmps = s.delmin_cmps;
  r.delete_mins = s.delete_mins;
  if (s.has_final_k) r.final_k = s.final_k;
  r.wall_ns = s.wall_ns;
  return r;
}

struct Output {
  std::string format = "table";
  std::string out_path;

  void emit(const std::string& text) const {
    if (out_path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(out_path);
    if (!f) throw Failure("cannot open " + out_path + " for writing");
    f << text;
  }

  void emit_records(const std::vector<bench::RunRecord>& records, const std::string& human) const {
    if (format == "csv") {
      emit(bench::to_csv(records));
    } else if (format == "json") {
      emit(bench::to_json(records));
    } else {
      emit(human);
    }
  }
};

double as_double(std::uint64_t v) { return static_cast<double>(v); }

// ---- sort -------------------------------------------------------------------

struct SortArgs {
  std::string heap = "all";
  std::size_t n = 100000;
  std::uint64_t seed = 1;
  std::vector<std::string> orders{"random"};
  std::string seq_file;
};

void cmd_sort(const SortArgs& a, const Output& out) {
  struct Workload {
    std::string label;
    std::vector<std::int64_t> keys;
  };
  std::vector<Workload> workloads;
  if (!a.seq_file.empty()) {
    workloads.push_back({"file:" + basename_of(a.seq_file), read_sequence(a.seq_file)});
  } else {
    for (const auto& label : a.orders) {
      const OrderSpec o = parse_order(label);
      workloads.push_back({o.label, generate(a.n, o, a.seed)});
    }
  }

  std::vector<bench::RunRecord> records;
  for (const Workload& w : workloads) {
    for (const auto& [name, kind] : selected_heaps(a.heap)) {
      lh_run_stats stats{};
      check(lh_run_sort(kind, w.keys.data(), w.keys.size(), nullptr, &stats), name + " sort of " + w.label);
      records.push_back(make_record(name, w.label, w.keys.size(), 0, a.seed, stats));
    }
  }

  std::ostringstream human;
  human << bench::render_records(records) << '\n';
  human << bench::render_table(bench::normalized_table(records, "Normalized wallclock (1.00 = fastest)",
                                                       [](const bench::RunRecord& r) { return as_double(r.wall_ns); }))
        << '\n';
  human << bench::render_table(bench::normalized_table(
      records, "Normalized comparisons (1.00 = fewest)",
      [](const bench::RunRecord& r) { return as_double(r.total_cmps); }));
  out.emit_records(records, human.str());
}

// ---- dijkstra ---------------------------------------------------------------

struct DijkstraArgs {
  std::string heap = "all";
  std::string graph_file;
  std::vector<std::size_t> gen;
  std::uint64_t seed = 1;
  std::size_t source = 1;
  bool print_dist = false;
};

void cmd_dijkstra(const DijkstraArgs& a, const Output& out) {
  lh_graph* raw = nullptr;
  std::string label;
  if (!a.graph_file.empty()) {
    check(lh_graph_read_dimacs(a.graph_file.c_str(), &raw), "reading " + a.graph_file);
    label = "file:" + basename_of(a.graph_file);
  } else {
    check(lh_graph_generate(a.gen.at(0), a.gen.at(1), a.seed, &raw), "generating graph");
    label = "gen:" + std::to_string(a.gen[0]) + "x" + std::to_string(a.gen[1]);
  }
  GraphPtr graph(raw);
  const std::size_t n = lh_graph_vertex_count(graph.get());
  const std::size_t m = lh_graph_edge_count(graph.get());
  if (a.source < 1 || a.source > n) throw Failure("--source must be in 1.." + std::to_string(n));

  std::vector<bench::RunRecord> records;
  std::optional<std::vector<std::int64_t>> reference;
  std::string reference_heap;
  for (const auto& [name, kind] : selected_heaps(a.heap)) {
    std::vector<std::int64_t> dist(n);
    lh_run_stats stats{};
    check(lh_run_dijkstra(graph.get(), a.source - 1, kind, dist.data(), &stats), name + " dijkstra");
    if (!reference) {
      reference = dist;
      reference_heap = name;
    } else if (*reference != dist) {
      throw Failure("distance vectors differ between " + reference_heap + " and " + name);
    }
    records.push_back(make_record(name, label, n, m, a.seed, stats));
  }

  std::ostringstream human;
  if (a.print_dist) {
    human << "dist [";
    for (std::size_t v = 0; v < n; ++v) human << (v ? "," : "") << (*reference)[v];
    human << "]\n";
  }
  human << bench::render_records(records) << '\n';
  human << bench::render_table(bench::normalized_table(records, "Normalized wallclock (1.00 = fastest)",
                                                       [](const bench::RunRecord& r) { return as_double(r.wall_ns); }))
        << '\n';
  human << bench::render_table(bench::normalized_table(
               records, "Normalized comparisons (1.00 = fewest)",
               [](const bench::RunRecord& r) { return as_double(r.total_cmps); }))
        << '\n';
  human << bench::render_table(bench::normalized_table(
      records, "Normalized mean comparisons per delete_min", [](const bench::RunRecord& r) {
        return r.delete_mins ? as_double(r.delmin_cmps) / as_double(r.delete_mins) : 0.0;
      }));
  if (records.size() > 1) human << "distances identical across " << records.size() << " heaps\n";
  out.emit_records(records, human.str());
}

// ---- measure ----------------------------------------------------------------

struct MeasureArgs {
  std::size_t n = 1000;
  std::uint64_t seed = 1;
  std::string order = "random";
  std::string seq_file;
  bool show_partitions = false;
};

void cmd_measure(const MeasureArgs& a, const Output& out) {
  const std::vector<std::int64_t> keys =
      a.seq_file.empty() ? generate(a.n, parse_order(a.order), a.seed) : read_sequence(a.seq_file);
  const std::size_t n = keys.size();
  std::size_t runs = 0;
  std::size_t sus = 0;
  std::size_t enc = 0;
  check(lh_runs_count(keys.data(), n, &runs), "runs");
  check(lh_sus_count(keys.data(), n, &sus), "SUS");
  check(lh_enc_count(keys.data(), n, &enc), "Enc");
  const double sus_ratio = n ? static_cast<double>(sus) / std::sqrt(static_cast<double>(n)) : 0.0;

  std::vector<std::size_t> run_lengths(n);
  std::vector<std::int64_t> flat(n);
  std::vector<std::size_t> seq_lengths(n);
  std::size_t run_parts = 0;
  std::size_t enc_parts = 0;
  if (a.show_partitions) {
    check(lh_runs_partition(keys.data(), n, run_lengths.data(), &run_parts), "runs partition");
    check(lh_enc_build(keys.data(), n, flat.data(), seq_lengths.data(), &enc_parts), "encroaching set");
  }

  if (out.format == "json" || out.format == "csv") {
    if (out.format == "csv") {
      std::ostringstream os;
      os << "n,runs,sus,enc\n" << n << ',' << runs << ',' << sus << ',' << enc << '\n';
      out.emit(os.str());
      return;
    }
    std::ostringstream os;
    os << "{\"n\": " << n << ", \"runs\": " << runs << ", \"sus\": " << sus << ", \"enc\": " << enc
       << ", \"sus_over_sqrt_n\": " << sus_ratio << "}\n";
    out.emit(os.str());
    return;
  }

  std::ostringstream os;
  os << "n=" << n << " runs=" << runs << " SUS=" << sus << " Enc=" << enc << '\n';
  os << "SUS/sqrt(n)=" << std::fixed << std::setprecision(4) << sus_ratio << '\n';
  if (a.show_partitions) {
    os << "runs:";
    std::size_t at = 0;
    for (std::size_t p = 0; p < run_parts; ++p) {
      os << " <";
      for (std::size_t j = 0; j < run_lengths[p]; ++j, ++at) os << (j ? "," : "") << keys[at];
      os << '>';
    }
    os << "\nencroaching set:";
    at = 0;
    for (std::size_t p = 0; p < enc_parts; ++p) {
      os << " <";
      for (std::size_t j = 0; j < seq_lengths[p]; ++j, ++at) os << (j ? "," : "") << flat[at];
      os << '>';
    }
    os << '\n';
  }
  out.emit(os.str());
}

// ---- trace ------------------------------------------------------------------

struct TraceArgs {
  std::string heap = "ra";
  std::size_t n = 16;
  std::uint64_t seed = 1;
  std::string order = "random";
  std::string seq_file;
  std::string ops;
  bool drain = false;
  std::size_t limit = 64;
};

std::string describe(const lh_heap* heap) {
  std::size_t needed = 0;
  lh_heap_describe(heap, nullptr, 0, &needed);
  std::string buf(needed, '\0');
  check(lh_heap_describe(heap, buf.data(), buf.size(), &needed), "describe");
  buf.resize(needed - 1);
  return buf;
}

// Script tokens, separated by commas or spaces: "i:<key>" insert,
// "d" delete_min, "k:<old>:<new>" decrease the item holding <old> to <new>.
void cmd_trace(const TraceArgs& a, const Output& out) {
  std::vector<std::string> script;
  if (!a.ops.empty()) {
    std::string token;
    std::istringstream in(a.ops);
    while (std::getline(in, token, ',')) {
      std::istringstream words(token);
      std::string w;
      while (words >> w) script.push_back(w);
    }
  } else {
    if (a.seq_file.empty() && a.n > a.limit) {
      throw Failure("trace of " + std::to_string(a.n) + " keys exceeds --limit " + std::to_string(a.limit));
    }
    const std::vector<std::int64_t> keys =
        a.seq_file.empty() ? generate(a.n, parse_order(a.order), a.seed) : read_sequence(a.seq_file);
    if (keys.size() > a.limit) {
      throw Failure("trace of " + std::to_string(keys.size()) + " keys exceeds --limit " + std::to_string(a.limit));
    }
    for (std::int64_t k : keys) script.push_back("i:" + std::to_string(k));
    if (a.drain) script.insert(script.end(), keys.size(), "d");
  }
  if (script.size() > 4 * a.limit) throw Failure("trace script exceeds the step limit");

  lh_heap* raw = nullptr;
  check(lh_heap_create(kHeapNames.at(a.heap), LH_KEY_I64, &raw), "creating heap");
  HeapPtr heap(raw);
  std::map<std::int64_t, lh_handle> handles;
  std::ostringstream log;
  std::size_t step = 0;
  for (const std::string& tok : script) {
    ++step;
    const std::uint64_t before = lh_heap_comparisons(heap.get());
    std::string what;
    if (tok == "d") {
      std::int64_t key = 0;
      check(lh_heap_delete_min_i64(heap.get(), &key, nullptr), "delete_min");
      handles.erase(key);
      what = "delete_min -> " + std::to_string(key);
    } else if (tok.rfind("i:", 0) == 0) {
      const std::int64_t key = std::stoll(tok.substr(2));
      lh_handle h = 0;
      check(lh_heap_insert_i64(heap.get(), key, &h), "insert " + std::to_string(key));
      handles[key] = h;
      what = "insert " + std::to_string(key);
    } else if (tok.rfind("k:", 0) == 0) {
      const auto colon = tok.find(':', 2);
      if (colon == std::string::npos) throw Failure("bad decrease token '" + tok + "'");
      const std::int64_t from = std::stoll(tok.substr(2, colon - 2));
      const std::int64_t to = std::stoll(tok.substr(colon + 1));
      auto it = handles.find(from);
      if (it == handles.end()) throw Failure("no stored key " + std::to_string(from));
      check(lh_heap_decrease_key_i64(heap.get(), it->second, to), "decrease_key " + tok);
      handles[to] = it->second;
      handles.erase(from);
      what = "decrease_key " + std::to_string(from) + " -> " + std::to_string(to);
    } else {
      throw Failure("unknown trace token '" + tok + "'");
    }
    check(lh_heap_validate(heap.get()), "invariant check after " + what);
    const std::string layout = describe(heap.get());
    log << step << ": " << what << " (" << lh_heap_comparisons(heap.get()) - before << " cmps)"
        << (layout.empty() ? "" : " ") << layout << '\n';
  }
  out.emit(log.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"List Heap benchmarks, disorder measures and traces"};
  app.require_subcommand(1);
  Output out;
  auto add_output = [&out](CLI::App* sub) {
    sub->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
    sub->add_option("--out", out.out_path, "Write output to this file instead of stdout");
  };
  const auto heap_names = CLI::IsMember({"ra", "ea", "binary", "all"});

  SortArgs sort_args;
  auto* sort = app.add_subcommand("sort", "n inserts followed by n delete_mins");
  sort->add_option("--heap", sort_args.heap, "ra, ea, binary or all")->check(heap_names);
  sort->add_option("--n", sort_args.n, "Sequence length");
  sort->add_option("--seed", sort_args.seed, "Generator seed");
  sort->add_option("--order", sort_args.orders,
                   "random, increasing, decreasing, runs:<r> or sus:<s>; comma-separated for several columns")
      ->delimiter(',');
  sort->add_option("--seq-file", sort_args.seq_file, "Read keys from a sequence file instead of generating")
      ->check(CLI::ExistingFile);
  add_output(sort);

  DijkstraArgs dj_args;
  auto* dj = app.add_subcommand("dijkstra", "Single-source shortest paths with each heap");
  dj->add_option("--heap", dj_args.heap, "ra, ea, binary or all")->check(heap_names);
  auto* graph_opt = dj->add_option("--graph-file", dj_args.graph_file, "DIMACS shortest-path graph file")
                        ->check(CLI::ExistingFile);
  auto* gen_opt = dj->add_option("--gen", dj_args.gen, "Generate a strongly connected graph with <n> <m>")
                      ->expected(2);
  graph_opt->excludes(gen_opt);
  dj->add_option("--seed", dj_args.seed, "Generator seed");
  dj->add_option("--source", dj_args.source, "Source vertex (1-based)");
  dj->add_flag("--print-dist", dj_args.print_dist, "Print the distance vector");
  add_output(dj);

  MeasureArgs measure_args;
  auto* measure = app.add_subcommand("measure", "Report runs, SUS and Enc of a sequence");
  measure->add_option("--n", measure_args.n, "Sequence length");
  measure->add_option("--seed", measure_args.seed, "Generator seed");
  measure->add_option("--order", measure_args.order, "random, increasing, decreasing, runs:<r> or sus:<s>");
  measure->add_option("--seq-file", measure_args.seq_file, "Sequence file")->check(CLI::ExistingFile);
  measure->add_flag("--show-partitions", measure_args.show_partitions, "Print the runs and the encroaching set");
  add_output(measure);

  TraceArgs trace_args;
  auto* trace = app.add_subcommand("trace", "Print the heap layout after every operation");
  trace->add_option("--heap", trace_args.heap, "ra, ea or binary")->check(CLI::IsMember({"ra", "ea", "binary"}));
  trace->add_option("--n", trace_args.n, "Sequence length");
  trace->add_option("--seed", trace_args.seed, "Generator seed");
  trace->add_option("--order", trace_args.order, "random, increasing, decreasing, runs:<r> or sus:<s>");
  trace->add_option("--seq-file", trace_args.seq_file, "Sequence file")->check(CLI::ExistingFile);
  trace->add_option("--ops", trace_args.ops, "Operation script: i:<key>, d, k:<old>:<new>");
  trace->add_flag("--drain", trace_args.drain, "Follow the inserts with delete_min until empty");
  trace->add_option("--limit", trace_args.limit, "Maximum number of keys to trace");
  trace->add_option("--out", out.out_path, "Write output to this file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sort->parsed()) {
      cmd_sort(sort_args, out);
    } else if (dj->parsed()) {
      if (dj_args.graph_file.empty() && dj_args.gen.empty()) {
        throw CLI::RequiredError("dijkstra needs --graph-file or --gen <n> <m>");
      }
      cmd_dijkstra(dj_args, out);
    } else if (measure->parsed()) {
      cmd_measure(measure_args, out);
    } else if (trace->parsed()) {
      cmd_trace(trace_args, out);
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
