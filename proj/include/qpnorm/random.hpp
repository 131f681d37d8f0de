#pragma once

#include <cstdint>
#include <random>

#include "qpnorm/types.hpp"

namespace qpnorm {

/// Seeded RNG with explicitly constructed distributions, so streams are
/// reproducible byte-for-byte across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(mix(seed)) {}

  /// Independent stream for (seed, index); used for per-restart streams
  /// so results do not depend on scheduling.
  static Rng substream(std::uint64_t seed, std::uint64_t index) {
    return Rng(mix(seed) ^ mix(index * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull));
  }

  double uniform() {  // [0, 1)
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double normal();

  Complex complex_normal() {  // unit-variance complex Gaussian
    return Complex(normal(), normal()) / std::sqrt(2.0);
  }

  std::uint64_t bits() { return gen_(); }

 private:
  static std::uint64_t mix(std::uint64_t x) {  // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Matrix with independent unit-variance complex Gaussian entries.
Matrix ginibre(Rng& rng, Eigen::Index rows, Eigen::Index cols);

/// Haar-uniform pure state amplitudes.
Vector random_state(Rng& rng, Eigen::Index d);

/// Haar-uniform unitary (QR of a Ginibre matrix with phase fixing).
Matrix random_unitary(Rng& rng, Eigen::Index d);

/// Random PSD matrix G G^dagger.
Matrix random_psd(Rng& rng, Eigen::Index d);

/// Random Hermitian (GUE-like) matrix.
Matrix random_hermitian(Rng& rng, Eigen::Index d);

}  // namespace qpnorm
