#pragma once

#include <cmath>
#include <sstream>
#include <type_traits>
#include <unordered_set>

#include "listheap/error.hpp"

namespace lheap::detail {

template <typename Key>
std::string key_to_string(const Key& k) {
  std::ostringstream os;
  os << k;
  return os.str();
}

// Tracks the keys currently stored so duplicates can be rejected without
// spending counted comparisons.
template <typename Key>
class KeyRegistry {
 public:
  void check_insertable(const Key& k) const {
    if constexpr (std::is_floating_point_v<Key>) {
      if (std::isnan(k)) throw Error(Errc::invalid_argument, "NaN is not a valid key");
    }
    if (keys_.contains(k)) {
      throw Error(Errc::duplicate_key, "duplicate key " + key_to_string(k));
    }
  }
  void add(const Key& k) { keys_.insert(k); }
  void remove(const Key& k) { keys_.erase(k); }
  void replace(const Key& old_key, const Key& new_key) {
    keys_.erase(old_key);
    keys_.insert(new_key);
  }
  void clear() { keys_.clear(); }

 private:
  std::unordered_set<Key> keys_;
};

}  // namespace lheap::detail
