#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace otocspec {

// Philox4x64-10 counter-based generator (Salmon et al., Random123).
// The key is (seed, stream); every (seed, stream) pair is an independent,
// reproducible sequence, so parallel workers can each own a stream.
class Philox {
 public:
  using result_type = std::uint64_t;
  using Block = std::array<std::uint64_t, 4>;
  using Key = std::array<std::uint64_t, 2>;

  Philox(std::uint64_t seed, std::uint64_t stream = 0) : key_{seed, stream} {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  // Uniform double on [0, 1) with 53 random bits.
  double uniform();
  // Standard normal via Box-Muller.
  double normal();

  // One application of the 10-round bijection.
  static Block bijection(Block counter, Key key);

 private:
  Key key_;
  Block counter_{0, 0, 0, 0};
  Block buffer_{};
  int buffer_pos_ = 4;
  bool has_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

}  // namespace otocspec
