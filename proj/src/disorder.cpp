#include "listheap/disorder.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <queue>
#include <string>
#include <tuple>

#include "listheap/error.hpp"

namespace lheap {

bool EncroachingSet::is_encroaching() const noexcept {
  for (const auto& s : sequences) {
    if (s.empty()) return false;
    if (std::adjacent_find(s.begin(), s.end(), std::greater_equal<>{}) != s.end()) return false;
  }
  for (std::size_t i = 0; i + 1 < sequences.size(); ++i) {
    if (!(sequences[i].front() < sequences[i + 1].front())) return false;
    if (!(sequences[i].back() > sequences[i + 1].back())) return false;
  }
  return true;
}

void require_unique(std::span<const std::int64_t> xs) {
  std::vector<std::int64_t> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) throw Error(Errc::duplicate_key, "duplicate key " + std::to_string(*dup));
}

Partition runs_partition(std::span<const std::int64_t> xs) {
  require_unique(xs);
  Partition parts;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i == 0 || xs[i - 1] < xs[i]) parts.emplace_back();
    parts.back().push_back({i, xs[i]});
  }
  return parts;
}

std::size_t runs_count(std::span<const std::int64_t> xs) {
  require_unique(xs);
  std::size_t runs = xs.empty() ? 0 : 1;
  for (std::size_t i = 1; i < xs.size(); ++i) runs += xs[i - 1] < xs[i] ? 1 : 0;
  return runs;
}

std::size_t sus_count(std::span<const std::int64_t> xs) {
  require_unique(xs);
  // Tails of the open subsequences, kept in decreasing order. A key that is
  // below every tail opens a new subsequence at the back.
  std::vector<std::int64_t> tails;
  for (std::int64_t x : xs) {
    auto it = std::lower_bound(tails.begin(), tails.end(), x, std::greater<>{});
    if (it == tails.end()) {
      tails.push_back(x);
    } else {
      *it = x;
    }
  }
  return tails.size();
}

EncroachingSet enc_build(std::span<const std::int64_t> xs) {
  require_unique(xs);
  std::vector<std::deque<std::int64_t>> seqs;
  // heads ascend and tails descend with the sequence index, so "oldest that
  // fits" is a binary search on either array.
  std::vector<std::int64_t> heads;
  std::vector<std::int64_t> tails;
  for (std::int64_t y : xs) {
    auto h = std::upper_bound(heads.begin(), heads.end(), y);
    if (h != heads.end()) {
      const auto j = static_cast<std::size_t>(h - heads.begin());
      seqs[j].push_front(y);
      *h = y;
      continue;
    }
    auto t = std::partition_point(tails.begin(), tails.end(), [y](std::int64_t tail) { return tail > y; });
    if (t != tails.end()) {
      const auto j = static_cast<std::size_t>(t - tails.begin());
      seqs[j].push_back(y);
      *t = y;
      continue;
    }
    seqs.emplace_back(1, y);
    heads.push_back(y);
    tails.push_back(y);
  }
  EncroachingSet out;
  out.sequences.reserve(seqs.size());
  for (auto& s : seqs) out.sequences.emplace_back(s.begin(), s.end());
  return out;
}

std::size_t enc_count(std::span<const std::int64_t> xs) { return enc_build(xs).size(); }

KeySequence melsort(std::span<const std::int64_t> xs) {
  const EncroachingSet enc = enc_build(xs);
  using Cursor = std::tuple<std::int64_t, std::size_t, std::size_t>;  // key, sequence, offset
  std::priority_queue<Cursor, std::vector<Cursor>, std::greater<>> frontier;
  for (std::size_t s = 0; s < enc.sequences.size(); ++s) frontier.emplace(enc.sequences[s][0], s, 0);
  KeySequence out;
  out.reserve(xs.size());
  while (!frontier.empty()) {
    auto [key, s, off] = frontier.top();
    frontier.pop();
    out.push_back(key);
    if (off + 1 < enc.sequences[s].size()) frontier.emplace(enc.sequences[s][off + 1], s, off + 1);
  }
  return out;
}

}  // namespace lheap
