#include "fedsim/rng.hpp"

#include <cmath>

#include "fedsim/errors.hpp"

namespace fedsim {

namespace {

// Stafford mix13 finalizer: full 64-bit avalanche, bijective.
std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

}  // namespace

Rng::Rng(std::uint64_t seed) {
  key_lo_ = mix64(seed + kGolden);
  key_hi_ = mix64(seed + 2 * kGolden);
  path_ = "seed:" + std::to_string(seed);
}

Rng::Rng(std::uint64_t key_hi, std::uint64_t key_lo, std::string path)
    : key_hi_(key_hi), key_lo_(key_lo), path_(std::move(path)) {}

Rng Rng::split(std::string_view label) const {
  const std::uint64_t h = fnv1a(label);
  // Chain through mix64 so fold-ins do not commute: split(split(r,a),b)
  // differs from split(split(r,b),a).
  const std::uint64_t lo = mix64(key_lo_ ^ mix64(h + kGolden));
  const std::uint64_t hi = mix64(key_hi_ ^ mix64(h + 2 * kGolden));
  return Rng(hi, lo, path_ + "/" + std::string(label));
}

Rng Rng::split(std::uint64_t label) const {
  return split(std::to_string(label));
}

std::uint64_t Rng::next_u64() {
  std::uint64_t z = counter_++;
  z = mix64(z ^ key_lo_);
  z = mix64(z + key_hi_);
  return mix64(z ^ kGolden);
}

double Rng::next_double() {
  // 53 mantissa bits.
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::next_below(std::uint64_t n) {
  if (n == 0) throw InvalidArgumentError("next_below requires n > 0");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % n;
}

double Rng::next_gaussian() {
  // u1 in (0, 1] so the log is finite.
  const double u1 =
      (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = next_double();
  const double r = std::sqrt(-2.0 * std::log(u1));
  return r * std::cos(2.0 * 3.14159265358979323846 * u2);
}

}  // namespace fedsim
