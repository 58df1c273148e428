#pragma once

#include <array>
#include <cstdint>

namespace ks::rng {

// Philox4x32-10 (Salmon, Moraes, Dror, Shaw; SC'11), as in Random123.
// Pure function of (counter, key): no hidden state.
using Counter = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;
Counter philox4x32_10(Counter ctr, Key key) noexcept;

inline constexpr const char* kAlgorithm = "Philox4x32-10";

// One independent stream per (seed, stream index). The seed is the key; the
// counter is (draw_lo, draw_hi, stream_lo, stream_hi), so draws from different
// streams never share a counter block.
class Stream {
 public:
  Stream(std::uint64_t seed, std::uint64_t stream) noexcept;

  std::uint32_t next_u32() noexcept;
  std::uint64_t next_u64() noexcept;
  // Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept;
  // Uniform on (0, 1].
  double uniform_pos() noexcept { return 1.0 - uniform(); }
  // Uniform integer in [0, n).
  int below(int n) noexcept;

 private:
  Key key_;
  Counter ctr_;
  Counter buf_{};
  int used_ = 4;
};

}  // namespace ks::rng
