#include "listheap/sequence.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string_view>

#include "listheap/error.hpp"

namespace lheap {
namespace {

void verify(const SequenceSpec& spec, const KeySequence& keys) {
  bool ok = keys.size() == spec.n;
  switch (spec.order) {
    case Order::random:
      require_unique(keys);
      break;
    case Order::increasing:
      ok = ok && runs_count(keys) == spec.n;
      break;
    case Order::decreasing:
      ok = ok && runs_count(keys) == (spec.n == 0 ? 0 : 1);
      break;
    case Order::runs:
      ok = ok && runs_count(keys) == spec.param;
      break;
    case Order::sus:
      ok = ok && sus_count(keys) == spec.param;
      break;
  }
  if (!ok) throw std::logic_error("generated sequence does not have its declared order " + order_label(spec));
}

std::int64_t parse_int(std::string_view text, std::size_t line) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(Errc::parse, "line " + std::to_string(line) + ": expected an integer, got '" + std::string(text) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

KeySequence gen_sequence(const SequenceSpec& spec) {
  const std::size_t n = spec.n;
  KeySequence keys(n);
  std::iota(keys.begin(), keys.end(), std::int64_t{1});

  switch (spec.order) {
    case Order::random: {
      std::mt19937_64 rng(spec.seed);
      std::shuffle(keys.begin(), keys.end(), rng);
      break;
    }
    case Order::increasing:
      break;
    case Order::decreasing:
      std::reverse(keys.begin(), keys.end());
      break;
    case Order::runs: {
      // r decreasing blocks over consecutive value ranges; a block's last key
      // (its range minimum) is below the next block's first key, so no two
      // blocks merge into one run.
      const std::size_t r = spec.param;
      if (r > n || (r == 0 && n > 0)) {
        throw Error(Errc::infeasible, "runs:" + std::to_string(r) + " is infeasible for n=" + std::to_string(n));
      }
      std::size_t begin = 0;
      for (std::size_t b = 0; b < r; ++b) {
        const std::size_t len = n / r + (b < n % r ? 1 : 0);
        std::reverse(keys.begin() + static_cast<std::ptrdiff_t>(begin),
                     keys.begin() + static_cast<std::ptrdiff_t>(begin + len));
        begin += len;
      }
      break;
    }
    case Order::sus: {
      // Blocks of s keys over increasing value ranges. Decreasing subsequences
      // cannot span blocks; the first block is fully decreasing and the rest
      // are shuffled, so the longest decreasing subsequence is exactly s.
      const std::size_t s = spec.param;
      if (s > n || (s == 0 && n > 0)) {
        throw Error(Errc::infeasible, "sus:" + std::to_string(s) + " is infeasible for n=" + std::to_string(n));
      }
      std::mt19937_64 rng(spec.seed);
      for (std::size_t begin = 0; begin < n; begin += s) {
        auto first = keys.begin() + static_cast<std::ptrdiff_t>(begin);
        auto last = keys.begin() + static_cast<std::ptrdiff_t>(std::min(n, begin + s));
        if (begin == 0) {
          std::reverse(first, last);
        } else {
          std::shuffle(first, last, rng);
        }
      }
      break;
    }
  }
  verify(spec, keys);
  return keys;
}

std::string order_label(const SequenceSpec& spec) {
  switch (spec.order) {
    case Order::random: return "random";
    case Order::increasing: return "increasing";
    case Order::decreasing: return "decreasing";
    case Order::runs: return "runs:" + std::to_string(spec.param);
    case Order::sus: return "sus:" + std::to_string(spec.param);
  }
  return "?";
}

void parse_order_label(const std::string& label, SequenceSpec& spec) {
  auto param_of = [&](std::string_view prefix) {
    const std::string_view rest = std::string_view(label).substr(prefix.size());
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
    if (rest.empty() || ec != std::errc{} || ptr != rest.data() + rest.size()) {
      throw Error(Errc::invalid_argument, "bad order parameter in '" + label + "'");
    }
    return v;
  };
  if (label == "random") {
    spec.order = Order::random;
  } else if (label == "increasing") {
    spec.order = Order::increasing;
  } else if (label == "decreasing") {
    spec.order = Order::decreasing;
  } else if (label.starts_with("runs:")) {
    spec.order = Order::runs;
    spec.param = param_of("runs:");
  } else if (label.starts_with("sus:")) {
    spec.order = Order::sus;
    spec.param = param_of("sus:");
  } else {
    throw Error(Errc::invalid_argument, "unknown order '" + label + "'");
  }
}

KeySequence parse_sequence(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> declared;
  KeySequence keys;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view t = trim(line);
    if (t.empty()) continue;
    if (!declared) {
      if (!t.starts_with("n=")) throw Error(Errc::parse, "line " + std::to_string(line_no) + ": expected header 'n=<count>'");
      const std::int64_t n = parse_int(t.substr(2), line_no);
      if (n < 0) throw Error(Errc::parse, "line " + std::to_string(line_no) + ": negative count");
      declared = static_cast<std::size_t>(n);
      keys.reserve(*declared);
      continue;
    }
    keys.push_back(parse_int(t, line_no));
  }
  if (!declared) throw Error(Errc::parse, "missing header 'n=<count>'");
  if (keys.size() != *declared) {
    throw Error(Errc::parse, "header declares " + std::to_string(*declared) + " keys but file has " +
                                 std::to_string(keys.size()));
  }
  return keys;
}

void format_sequence(std::span<const std::int64_t> keys, std::ostream& out) {
  out << "n=" << keys.size() << '\n';
  for (std::int64_t k : keys) out << k << '\n';
}

KeySequence read_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot open " + path);
  return parse_sequence(in);
}

void write_sequence_file(const std::string& path, std::span<const std::int64_t> keys) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::io, "cannot open " + path + " for writing");
  format_sequence(keys, out);
  if (!out) throw Error(Errc::io, "write to " + path + " failed");
}

}  // namespace lheap
