#pragma once

#include <liepair/deform.hpp>

#include <cstdint>
#include <random>

namespace liepair {

/// Deterministic random instances for property campaigns. Values are small
/// rationals so exact arithmetic stays cheap.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }
  std::size_t index(std::size_t n);
  bool coin();

  /// Integer in [-bound, bound], occasionally halved or thirded; zero with probability ~1/2 when `sparse`.
  Scalar scalar(bool sparse = false);
  Vector vector(std::size_t n, bool sparse = false);

  OmegaElement omega(const LiePair& pair, std::size_t k);
  /// Random element of ker(d_ce) in degree 1.
  OmegaElement cocycle(const LiePair& pair);
  /// Random element of Omega^k (x) m.
  AOmega omega_m(const LiePair& pair, const ArtinAlgebra& alg, std::size_t k = 1);

  Matrix derivation(const LiePair& pair, GaugeMode mode = GaugeMode::weak);
  /// Random derivation with delta(a) in a, i.e. [delta]_1 = 0.
  Matrix stabilizer_derivation(const LiePair& pair);
  GaugeParameter gauge(const LiePair& pair, const ArtinAlgebra& alg, GaugeMode mode = GaugeMode::weak);
  SmallAutomorphism automorphism(const LiePair& pair, const ArtinAlgebra& alg, GaugeMode mode = GaugeMode::weak);

  /// A verified MC element built by order-by-order extension of random
  /// cocycles, then moved along a random gauge orbit.
  MCElement mc(const LiePair& pair, const ArtinAlgebra& alg);

 private:
  std::mt19937_64 rng_;
};

}  // namespace liepair
