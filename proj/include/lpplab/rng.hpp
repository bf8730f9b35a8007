#pragma once

// Counter-based random streams (Philox4x32-10, Salmon et al. SC 2011).
//
// Every random quantity in the library is drawn from a stream addressed by a
// StreamKey = (experiment_seed, replica, purpose). Distinct keys give
// statistically independent streams; the same key replays the same sequence
// on any platform. Output is pinned by the Random123 known-answer vectors
// (see rng_self_test / tests).

#include <array>
#include <cstdint>
#include <cmath>
#include <string>

namespace lpplab {

// Purpose tags keep substreams of one replica from colliding.
enum class Purpose : uint32_t {
  bulk_field = 1,
  diagonal = 2,
  lattice = 3,
  tasep = 4,
  bootstrap = 5,
  scratch = 15,
};

struct StreamKey {
  uint64_t experiment_seed = 0;
  uint32_t replica = 0;
  uint32_t purpose = static_cast<uint32_t>(Purpose::scratch);

  friend bool operator==(const StreamKey&, const StreamKey&) = default;
};

namespace detail {

inline constexpr uint32_t kPhiloxM0 = 0xD2511F53u;
inline constexpr uint32_t kPhiloxM1 = 0xCD9E8D57u;
inline constexpr uint32_t kPhiloxW0 = 0x9E3779B9u;
inline constexpr uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void philox_round(std::array<uint32_t, 4>& ctr, const std::array<uint32_t, 2>& key) {
  const uint64_t p0 = static_cast<uint64_t>(kPhiloxM0) * ctr[0];
  const uint64_t p1 = static_cast<uint64_t>(kPhiloxM1) * ctr[2];
  const uint32_t hi0 = static_cast<uint32_t>(p0 >> 32), lo0 = static_cast<uint32_t>(p0);
  const uint32_t hi1 = static_cast<uint32_t>(p1 >> 32), lo1 = static_cast<uint32_t>(p1);
  ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

}  // namespace detail

// One 128-bit block of Philox4x32 with 10 rounds.
inline std::array<uint32_t, 4> philox4x32(std::array<uint32_t, 4> ctr,
                                          std::array<uint32_t, 2> key) {
  using namespace detail;
  philox_round(ctr, key);
  for (int i = 1; i < 10; ++i) {
    key[0] += kPhiloxW0;
    key[1] += kPhiloxW1;
    philox_round(ctr, key);
  }
  return ctr;
}

// Checks the published Random123 known-answer vectors for philox4x32-10.
inline bool rng_self_test() {
  const std::array<uint32_t, 4> z = philox4x32({0, 0, 0, 0}, {0, 0});
  const std::array<uint32_t, 4> f =
      philox4x32({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}, {0xffffffffu, 0xffffffffu});
  const std::array<uint32_t, 4> p =
      philox4x32({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, {0xa4093822u, 0x299f31d0u});
  return z == std::array<uint32_t, 4>{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u} &&
         f == std::array<uint32_t, 4>{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu} &&
         p == std::array<uint32_t, 4>{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u};
}

// Hex digest of the known-answer outputs; stored in run manifests so a run
// records which generator produced it.
inline std::string rng_kat_hash() {
  const std::array<std::array<uint32_t, 4>, 3> blocks = {
      philox4x32({0, 0, 0, 0}, {0, 0}),
      philox4x32({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}, {0xffffffffu, 0xffffffffu}),
      philox4x32({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, {0xa4093822u, 0x299f31d0u})};
  uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
  for (const auto& b : blocks)
    for (uint32_t w : b)
      for (int i = 0; i < 4; ++i) {
        h ^= (w >> (8 * i)) & 0xffu;
        h *= 0x100000001b3ull;
      }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

// SplitMix64 finalizer; used to derive child seeds (e.g. one seed per n-level
// of an experiment) from a root seed.
inline uint64_t mix64(uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline uint64_t derive_seed(uint64_t root_seed, uint64_t salt) {
  return mix64(root_seed ^ mix64(salt));
}

inline double u64_to_unit_double(uint64_t z) {
  return static_cast<double>(z >> 11) * 0x1.0p-53;  // [0,1)
}

// Sequential stream: counter words = (draw_lo, draw_hi, replica, purpose).
class Stream {
 public:
  explicit Stream(const StreamKey& k)
      : key_{static_cast<uint32_t>(k.experiment_seed),
             static_cast<uint32_t>(k.experiment_seed >> 32)},
        c2_(k.replica),
        c3_(k.purpose) {}

  uint64_t next_u64() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const auto out = philox4x32({static_cast<uint32_t>(block_), static_cast<uint32_t>(block_ >> 32),
                                 c2_, c3_},
                                key_);
    ++block_;
    spare_ = (static_cast<uint64_t>(out[3]) << 32) | out[2];
    have_spare_ = true;
    return (static_cast<uint64_t>(out[1]) << 32) | out[0];
  }

  // Uniform on [0,1).
  double uniform() { return u64_to_unit_double(next_u64()); }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double exponential(double rate) { return -std::log1p(-uniform()) / rate; }

  // Uniform integer in [0,n); n >= 1.
  uint64_t uniform_index(uint64_t n) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

 private:
  std::array<uint32_t, 2> key_;
  uint32_t c2_, c3_;
  uint64_t block_ = 0;
  uint64_t spare_ = 0;
  bool have_spare_ = false;
};

// Random-access (indexed) draws: the uniform attached to index pair (i,j)
// under a key is a pure function of (key, i, j). The high counter word is
// tagged so indexed draws never collide with a sequential stream of the same
// key. Used for per-(particle, jump) clocks and per-lattice-cell weights.
inline uint64_t u64_at(const StreamKey& k, uint32_t i, uint32_t j) {
  const auto out = philox4x32(
      {i, j, k.replica, k.purpose | 0x80000000u},
      {static_cast<uint32_t>(k.experiment_seed), static_cast<uint32_t>(k.experiment_seed >> 32)});
  return (static_cast<uint64_t>(out[1]) << 32) | out[0];
}

inline double uniform_at(const StreamKey& k, uint32_t i, uint32_t j) {
  return u64_to_unit_double(u64_at(k, i, j));
}

inline double exponential_at(const StreamKey& k, uint32_t i, uint32_t j, double rate) {
  return -std::log1p(-uniform_at(k, i, j)) / rate;
}

}  // namespace lpplab
