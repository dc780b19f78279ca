#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace fedsim {

// Splittable counter-based generator. The 128-bit key identifies a stream;
// draws advance only the counter, so copies are cheap and a value can be
// handed to a worker thread without any shared mutable state.
//
// split() derives a child key purely from (parent key, label). It ignores the
// draw counter, so the child stream does not depend on how many values were
// drawn from the parent. Sequential and parallel runners therefore consume
// identical per-client streams.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  Rng split(std::string_view label) const;
  Rng split(std::uint64_t label) const;

  std::uint64_t next_u64();
  // Uniform in [0, 1).
  double next_double();
  // Uniform integer in [0, n), rejection-sampled so every value is equally
  // likely. n must be positive.
  std::uint64_t next_below(std::uint64_t n);
  // Standard normal via Box-Muller; consumes two uniforms per call.
  double next_gaussian();

  std::uint64_t key_hi() const { return key_hi_; }
  std::uint64_t key_lo() const { return key_lo_; }

  // Fold-in labels from the root, joined with '/'. Diagnostic only.
  const std::string& path() const { return path_; }

  bool same_stream(const Rng& other) const {
    return key_hi_ == other.key_hi_ && key_lo_ == other.key_lo_;
  }

 private:
  Rng(std::uint64_t key_hi, std::uint64_t key_lo, std::string path);

  std::uint64_t key_hi_ = 0;
  std::uint64_t key_lo_ = 0;
  std::uint64_t counter_ = 0;
  std::string path_;
};

}  // namespace fedsim
