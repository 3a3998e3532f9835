#pragma once
// Shared plumbing: errors, deterministic RNG, small helpers.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace carthom {

struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

struct invariant_violation : error {
  explicit invariant_violation(const std::string& msg) : error(msg) {}
};

struct truncation_error : error {
  explicit truncation_error(const std::string& msg) : error(msg) {}
};

struct input_error : error {
  explicit input_error(const std::string& msg) : error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw invariant_violation(msg);
}

// Deterministic RNG; draws use modulo reduction so sequences are stable
// across platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}
  uint64_t next() { return eng_(); }
  // uniform in [0, n)
  uint64_t below(uint64_t n) { return n ? eng_() % n : 0; }
  int64_t range(int64_t lo, int64_t hi) {  // inclusive ends
    return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 eng_;
};

// FNV-1a, used for cache keys.
inline uint64_t fnv1a(const void* data, size_t len, uint64_t h = 1469598103934665603ull) {
  const unsigned char* b = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < len; ++i) {
    h ^= b[i];
    h *= 1099511628211ull;
  }
  return h;
}

inline uint64_t fnv1a_str(const std::string& s, uint64_t h = 1469598103934665603ull) {
  return fnv1a(s.data(), s.size(), h);
}

inline uint64_t fnv1a_u64(uint64_t h, uint64_t v) { return fnv1a(&v, sizeof v, h); }

}  // namespace carthom
