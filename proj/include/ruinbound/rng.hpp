#pragma once

#include <cstdint>

namespace ruinbound {

// 64-bit finalizer (Stafford variant 13 of the SplitMix64 mixer).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based uniform stream: draw i is mix64(key + i * golden gamma).
// A stream is a pure function of its key, so the draw sequence cannot be
// perturbed by scheduling or by other streams.
class RngStream {
 public:
  explicit RngStream(std::uint64_t key) noexcept : state_(key) {}

  std::uint64_t next_u64() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  // Uniform on the open interval (0, 1); safe under log().
  double next_unit() noexcept {
    return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1p-52;
  }

 private:
  std::uint64_t state_;
};

// Role of a per-path substream. Premium, claim, and interest sequences use
// distinct roles so they are mutually independent within a path.
enum class StreamRole : std::uint64_t {
  Premium = 1,
  Claim = 2,
  Interest = 3,
  Aux = 4,
};

// Deterministic (seed, path index, role) -> stream mapping shared by the
// sequential and multi-worker simulation drivers.
inline RngStream substream(std::uint64_t seed, std::uint64_t path,
                           StreamRole role) noexcept {
  std::uint64_t key = mix64(seed + 0x9e3779b97f4a7c15ULL);
  key = mix64(key ^ mix64(path + 0xd1b54a32d192ed03ULL));
  key = mix64(key ^ (static_cast<std::uint64_t>(role) * 0x9e3779b97f4a7c15ULL));
  return RngStream(key);
}

}  // namespace ruinbound
