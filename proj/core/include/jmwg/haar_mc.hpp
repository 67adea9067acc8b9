#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "jmwg/scalar.hpp"

namespace jmwg {

/// Every tolerance used by the Monte Carlo checks lives here.
struct StatisticalGates {
  /// max |(U^* U - I)_{ab}| accepted for a sample.
  static constexpr double kUnitarityTolerance = 1e-12;
  /// |mc - exact| <= kAcceptanceSigmas * stderr.
  static constexpr double kAcceptanceSigmas = 4.0;
  /// Fraction of statistical runs that must pass.
  static constexpr double kRequiredPassFraction = 0.9;
};

/// Exact side of the convolution formula sums over S(n) x S(n).
inline constexpr int kMomentExactMaxN = 6;

using ComplexMatrix = Eigen::MatrixXcd;

/// 64-bit Mersenne Twister keyed by (seed, stream). Streams with different
/// indices are seeded independently from a SplitMix64 expansion of the pair.
class StreamRng {
 public:
  using result_type = std::uint64_t;

  explicit StreamRng(std::uint64_t seed, std::uint64_t stream = 0);

  /// Child stream for worker `index`; deterministic in (seed, stream, index).
  StreamRng split(std::uint64_t index) const;

  result_type operator()() { return engine_(); }
  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }

  double normal() { return normal_(engine_); }
  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Haar-distributed d x d unitary: QR of a complex Ginibre matrix, with each
/// column of Q multiplied by the unit phase of the matching diagonal entry of R.
ComplexMatrix sample_haar_unitary(int d, StreamRng& rng);

/// max_{a,b} |(U^* U - I)_{ab}|.
double unitarity_defect(const ComplexMatrix& u);

/// Joint moment E[u_{i(1)j(1)}..u_{i(n)j(n)} conj(u_{i'(1)j'(1)})..conj(u_{i'(n)j'(n)})].
/// Index sequences are 1-based.
struct MomentSpec {
  int n = 0;
  int d = 0;
  std::vector<int> i;
  std::vector<int> j;
  std::vector<int> iprime;
  std::vector<int> jprime;

  /// Throws std::invalid_argument on length or range violations.
  void validate() const;
};

/// Random spec whose primed indices are permutations of the unprimed ones,
/// so that the moment is generically nonzero.
MomentSpec random_matched_spec(int n, int d, StreamRng& rng);

/// Exact value via the Weingarten convolution formula.
/// Throws WeingartenDomainError for d < n, std::length_error for n > kMomentExactMaxN.
Rational moment_exact(const MomentSpec& spec);

struct McEstimate {
  std::complex<double> mean;
  /// sqrt((var_re + var_im) / samples)
  double stderr = 0.0;
  double stderr_re = 0.0;
  double stderr_im = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  int workers = 1;

  /// |mean - exact| / stderr.
  double z_score(double exact) const;
  bool within(double exact, double sigmas = StatisticalGates::kAcceptanceSigmas) const;

  friend bool operator==(const McEstimate&, const McEstimate&) = default;
};

/// Empirical mean over `samples` Haar matrices split evenly over `workers`
/// threads; worker w draws from StreamRng(seed).split(w). Bit-identical for a
/// fixed (seed, samples, workers).
McEstimate moment_mc(const MomentSpec& spec, std::uint64_t samples, std::uint64_t seed, int workers = 1);

}  // namespace jmwg
