#pragma once

/*
 * Shared plumbing: error taxonomy, deterministic RNG, bit-string helpers.
 *
 * Error taxonomy maps onto CLI exit codes:
 *   usage_error    -> exit 2 (bad arguments, caps exceeded, unreadable files)
 *   check_error    -> exit 1 (a mathematical check failed; witness attached)
 *   internal_error -> exit 1 (broken invariant; indicates a bug, not bad input)
 */

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sylcoh {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

struct usage_error : std::runtime_error {
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

struct check_error : std::runtime_error {
  explicit check_error(const std::string& what) : std::runtime_error(what) {}
};

struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline void require_usage(bool cond, const std::string& msg) {
  if (!cond) throw usage_error(msg);
}

inline void require_internal(bool cond, const std::string& msg) {
  if (!cond) throw internal_error(msg);
}

/* splitmix64: tiny deterministic stream for sampled checks. */
class SplitMix64 {
 public:
  explicit SplitMix64(u64 seed) : state_(seed) {}

  u64 next() {
    u64 z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  u64 below(u64 n) { return n ? next() % n : 0; }

 private:
  u64 state_;
};

/* FNV-1a, used to key the resolution cache by group-file content. */
inline u64 fnv1a(const std::string& data) {
  u64 h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/* Binary string of `value` using exactly `width` digits, most significant first. */
inline std::string bits_string(u32 value, int width) {
  std::string s(static_cast<size_t>(width), '0');
  for (int i = 0; i < width; ++i)
    if (value >> i & 1u) s[static_cast<size_t>(width - 1 - i)] = '1';
  return s;
}

}  // namespace sylcoh
