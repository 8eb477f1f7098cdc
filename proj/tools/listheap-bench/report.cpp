#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace bench {
namespace {

std::size_t index_of(std::vector<std::string>& names, const std::string& name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it != names.end()) return static_cast<std::size_t>(it - names.begin());
  names.push_back(name);
  return names.size() - 1;
}

std::string format_cell(const std::optional<double>& v) {
  if (!v) return "-";
  if (std::isinf(*v)) return "inf";
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << *v;
  return os.str();
}

}  // namespace

ReportTable normalized_table(const std::vector<RunRecord>& records, std::string title, const Metric& metric) {
  ReportTable t;
  t.title = std::move(title);
  for (const RunRecord& r : records) {
    index_of(t.rows, r.heap);
    index_of(t.columns, r.workload);
  }
  std::vector<std::vector<std::optional<double>>> raw(t.rows.size(),
                                                      std::vector<std::optional<double>>(t.columns.size()));
  for (const RunRecord& r : records) raw[index_of(t.rows, r.heap)][index_of(t.columns, r.workload)] = metric(r);

  t.cells = raw;
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      if (raw[r][c]) lo = std::min(lo, *raw[r][c]);
    }
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      if (!raw[r][c]) continue;
      const double v = *raw[r][c];
      if (lo > 0) {
        t.cells[r][c] = v / lo;
      } else {
        t.cells[r][c] = v == lo ? 1.0 : std::numeric_limits<double>::infinity();
      }
    }
  }
  return t;
}

std::string render_table(const ReportTable& table) {
  std::size_t first = 6;
  for (const auto& r : table.rows) first = std::max(first, r.size());
  std::vector<std::size_t> widths;
  for (const auto& c : table.columns) widths.push_back(std::max<std::size_t>(c.size(), 8));

  std::ostringstream os;
  os << table.title << '\n';
  os << std::left << std::setw(static_cast<int>(first)) << "heap";
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    os << "  " << std::right << std::setw(static_cast<int>(widths[c])) << table.columns[c];
  }
  os << '\n';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    os << std::left << std::setw(static_cast<int>(first)) << table.rows[r];
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      os << "  " << std::right << std::setw(static_cast<int>(widths[c])) << format_cell(table.cells[r][c]);
    }
    os << '\n';
  }
  return os.str();
}

std::string render_records(const std::vector<RunRecord>& records) {
  std::ostringstream os;
  os << std::left << std::setw(8) << "heap" << std::setw(20) << "workload" << std::right << std::setw(10) << "n"
     << std::setw(10) << "m" << std::setw(14) << "total_cmps" << std::setw(12) << "max_delmin" << std::setw(12)
     << "mean_delmin" << std::setw(9) << "final_k" << std::setw(14) << "wall_ms" << '\n';
  for (const RunRecord& r : records) {
    const double mean = r.delete_mins ? static_cast<double>(r.delmin_cmps) / static_cast<double>(r.delete_mins) : 0.0;
    os << std::left << std::setw(8) << r.heap << std::setw(20) << r.workload << std::right << std::setw(10) << r.n
       << std::setw(10) << r.m << std::setw(14) << r.total_cmps << std::setw(12) << r.max_delmin_cmps
       << std::setw(12) << std::fixed << std::setprecision(2) << mean << std::setw(9)
       << (r.final_k ? std::to_string(*r.final_k) : std::string("-")) << std::setw(14) << std::setprecision(3)
       << static_cast<double>(r.wall_ns) / 1e6 << '\n';
  }
  return os.str();
}

std::string to_csv(const std::vector<RunRecord>& records) {
  std::ostringstream os;
  os << kCsvHeader << '\n';
  for (const RunRecord& r : records) {
    os << r.heap << ',' << r.workload << ',' << r.n << ',' << r.m << ',' << r.seed << ',' << r.total_cmps << ','
       << r.max_delmin_cmps << ',' << (r.final_k ? std::to_string(*r.final_k) : std::string()) << ',' << r.wall_ns
       << '\n';
  }
  return os.str();
}

std::string to_json(const std::vector<RunRecord>& records) {
  nlohmann::json out = nlohmann::json::array();
  for (const RunRecord& r : records) {
    out.push_back({{"heap", r.heap},
                   {"workload", r.workload},
                   {"n", r.n},
                   {"m", r.m},
                   {"seed", r.seed},
                   {"total_cmps", r.total_cmps},
                   {"max_delmin_cmps", r.max_delmin_cmps},
                   {"delmin_cmps", r.delmin_cmps},
                   {"delete_mins", r.delete_mins},
                   {"final_k", r.final_k ? nlohmann::json(*r.final_k) : nlohmann::json(nullptr)},
                   {"wall_ns", r.wall_ns}});
  }
  return out.dump(2) + "\n";
}

}  // namespace bench
