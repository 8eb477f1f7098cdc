#pragma once

#include <stdexcept>
#include <string>

namespace lheap {

enum class Errc {
  empty_heap,
  duplicate_key,
  invalid_handle,
  key_increase,
  invalid_argument,
  infeasible,
  parse,
  io,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace lheap
