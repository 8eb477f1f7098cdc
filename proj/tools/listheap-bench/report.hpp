#pragma once

// Benchmark records and the tables derived from them. Human tables and the
// CSV/JSON output are all rendered from the same RunRecord list.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace bench {

struct RunRecord {
  std::string heap;
  std::string workload;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t seed = 0;
  std::uint64_t total_cmps = 0;
  std::uint64_t max_delmin_cmps = 0;
  std::uint64_t delmin_cmps = 0;
  std::uint64_t delete_mins = 0;
  std::optional<std::uint64_t> final_k;  // list heaps only
  std::uint64_t wall_ns = 0;
};

/// Rows are heap kinds, columns are workloads, cells are a metric divided by
/// the column minimum (so each column's best cell reads 1.00). A zero minimum
/// maps zero cells to 1 and every other cell to +inf.
struct ReportTable {
  std::string title;
  std::vector<std::string> rows;
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<double>>> cells;  // [row][column]
};

using Metric = std::function<double(const RunRecord&)>;

ReportTable normalized_table(const std::vector<RunRecord>& records, std::string title, const Metric& metric);

std::string render_table(const ReportTable& table);
std::string render_records(const std::vector<RunRecord>& records);

inline constexpr const char* kCsvHeader = "heap,workload,n,m,seed,total_cmps,max_delmin_cmps,final_k,wall_ns";
std::string to_csv(const std::vector<RunRecord>& records);
std::string to_json(const std::vector<RunRecord>& records);

}  // namespace bench
