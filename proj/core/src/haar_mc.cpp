#include "jmwg/haar_mc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>

#include "jmwg/group_algebra.hpp"
#include "jmwg/weingarten.hpp"

namespace jmwg {

// ---------------------------------------------------------------------------
// StreamRng

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t state = seed ^ splitmix64(stream);
  std::seed_seq seq{static_cast<std::uint32_t>(splitmix64(state)), static_cast<std::uint32_t>(splitmix64(state)),
                    static_cast<std::uint32_t>(splitmix64(state)), static_cast<std::uint32_t>(splitmix64(state)),
                    static_cast<std::uint32_t>(splitmix64(state)), static_cast<std::uint32_t>(splitmix64(state)),
                    static_cast<std::uint32_t>(splitmix64(state)), static_cast<std::uint32_t>(splitmix64(state))};
  return std::mt19937_64(seq);
}

}  // namespace

StreamRng::StreamRng(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), engine_(seeded_engine(seed, stream)) {}

StreamRng StreamRng::split(std::uint64_t index) const {
  std::uint64_t mix = stream_ * 0x100000001b3ULL + index + 1;
  return StreamRng(seed_, splitmix64(mix));
}

int StreamRng::uniform_int(int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  return dist(engine_);
}

// ---------------------------------------------------------------------------
// Sampling

namespace {

template <typename Matrix>
Matrix haar_from_ginibre(Matrix z) {
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const auto& r = qr.matrixQR();
  for (Eigen::Index col = 0; col < q.cols(); ++col) {
    const std::complex<double> diag = r(col, col);
    const double mag = std::abs(diag);
    if (mag > 0) q.col(col) *= diag / mag;
  }
  return q;
}

template <typename Matrix>
Matrix ginibre(Eigen::Index d, StreamRng& rng) {
  Matrix z(d, d);
  for (Eigen::Index col = 0; col < d; ++col) {
    for (Eigen::Index row = 0; row < d; ++row) {
      const double re = rng.normal();
      const double im = rng.normal();
      z(row, col) = std::complex<double>(re, im);
    }
  }
  return z;
}

template <int D>
ComplexMatrix sample_fixed(StreamRng& rng) {
  using Fixed = Eigen::Matrix<std::complex<double>, D, D>;
  return haar_from_ginibre(ginibre<Fixed>(D, rng));
}

}  // namespace

ComplexMatrix sample_haar_unitary(int d, StreamRng& rng) {
  // Fixed-size kernels avoid heap traffic for the small dimensions used in tests.
  switch (d) {
    case 1: return sample_fixed<1>(rng);
    case 2: return sample_fixed<2>(rng);
    case 3: return sample_fixed<3>(rng);
    case 4: return sample_fixed<4>(rng);
    case 5: return sample_fixed<5>(rng);
    case 6: return sample_fixed<6>(rng);
    default:
      if (d < 1) throw std::invalid_argument("sample_haar_unitary: d must be at least 1");
      return haar_from_ginibre(ginibre<ComplexMatrix>(d, rng));
  }
}

double unitarity_defect(const ComplexMatrix& u) {
  const ComplexMatrix gram = u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols());
  return gram.cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------
// Moment specs

void MomentSpec::validate() const {
  if (n < 1) throw std::invalid_argument("MomentSpec: n must be at least 1");
  if (d < 1) throw std::invalid_argument("MomentSpec: d must be at least 1");
  for (const auto* seq : {&i, &j, &iprime, &jprime}) {
    if (static_cast<int>(seq->size()) != n) {
      throw std::invalid_argument("MomentSpec: every index sequence must have length n=" + std::to_string(n));
    }
    for (int v : *seq) {
      if (v < 1 || v > d) {
        throw std::invalid_argument("MomentSpec: index " + std::to_string(v) + " outside [1, " +
                                    std::to_string(d) + "]");
      }
    }
  }
}

MomentSpec random_matched_spec(int n, int d, StreamRng& rng) {
  MomentSpec spec;
  spec.n = n;
  spec.d = d;
  for (int k = 0; k < n; ++k) {
    spec.i.push_back(rng.uniform_int(1, d));
    spec.j.push_back(rng.uniform_int(1, d));
  }
  auto permuted = [&](std::vector<int> v) {
    for (int k = n - 1; k > 0; --k) std::swap(v[static_cast<std::size_t>(k)], v[static_cast<std::size_t>(rng.uniform_int(0, k))]);
    return v;
  };
  spec.iprime = permuted(spec.i);
  spec.jprime = permuted(spec.j);
  return spec;
}

Rational moment_exact(const MomentSpec& spec) {
  spec.validate();
  const int n = spec.n;
  if (n > kMomentExactMaxN) {
    throw std::length_error("moment_exact: n=" + std::to_string(n) + " exceeds " +
                            std::to_string(kMomentExactMaxN) + " (cost grows as (n!)^2)");
  }
  if (spec.d < n) {
    throw WeingartenDomainError("moment_exact: the convolution formula requires d >= n (got d=" +
                                std::to_string(spec.d) + ", n=" + std::to_string(n) + ")");
  }
  const auto perms = all_permutations(n);
  auto matches = [n](const Perm& p, const std::vector<int>& a, const std::vector<int>& b) {
    for (int k = 1; k <= n; ++k) {
      if (a[static_cast<std::size_t>(k - 1)] != b[static_cast<std::size_t>(p(k) - 1)]) return false;
    }
    return true;
  };
  std::vector<Perm> sigmas;
  std::vector<Perm> taus;
  for (const auto& p : perms) {
    if (matches(p, spec.i, spec.iprime)) sigmas.push_back(p);
    if (matches(p, spec.j, spec.jprime)) taus.push_back(p);
  }
  std::map<Partition, Rational> wg;
  for (const auto& mu : partitions_of(n)) wg.emplace(mu, wg_numeric(n, mu, spec.d));

  Rational total = 0;
  for (const auto& sigma : sigmas) {
    const Perm sigma_inv = sigma.inverse();
    for (const auto& tau : taus) total += wg.at((tau * sigma_inv).cycle_type());
  }
  return total;
}

// ---------------------------------------------------------------------------
// Estimation

namespace {

// Neumaier compensated sum.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      carry += (sum - t) + x;
    } else {
      carry += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + carry; }
};

struct Accumulator {
  CompensatedSum re, im, re2, im2;
  std::uint64_t count = 0;
};

Accumulator run_worker(const MomentSpec& spec, std::uint64_t samples, StreamRng rng) {
  Accumulator acc;
  const auto n = static_cast<std::size_t>(spec.n);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const ComplexMatrix u = sample_haar_unitary(spec.d, rng);
    std::complex<double> value(1.0, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      value *= u(spec.i[k] - 1, spec.j[k] - 1);
      value *= std::conj(u(spec.iprime[k] - 1, spec.jprime[k] - 1));
    }
    acc.re.add(value.real());
    acc.im.add(value.imag());
    acc.re2.add(value.real() * value.real());
    acc.im2.add(value.imag() * value.imag());
    ++acc.count;
  }
  return acc;
}

}  // namespace

double McEstimate::z_score(double exact) const {
  const double diff = std::abs(mean - std::complex<double>(exact, 0.0));
  if (stderr == 0.0) return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return diff / stderr;
}

bool McEstimate::within(double exact, double sigmas) const { return z_score(exact) <= sigmas; }

McEstimate moment_mc(const MomentSpec& spec, std::uint64_t samples, std::uint64_t seed, int workers) {
  spec.validate();
  if (samples < 1) throw std::invalid_argument("moment_mc: samples must be at least 1");
  if (workers < 1) throw std::invalid_argument("moment_mc: workers must be at least 1");

  const StreamRng root(seed);
  const auto w = static_cast<std::uint64_t>(workers);
  std::vector<Accumulator> parts(static_cast<std::size_t>(workers));
  auto share = [&](std::uint64_t k) { return samples / w + (k < samples % w ? 1 : 0); };

  if (workers == 1) {
    parts[0] = run_worker(spec, samples, root.split(0));
  } else {
    std::vector<std::thread> threads;
    threads.reserve(parts.size());
    for (std::uint64_t k = 0; k < w; ++k) {
      threads.emplace_back([&, k] { parts[k] = run_worker(spec, share(k), root.split(k)); });
    }
    for (auto& t : threads) t.join();
  }

  CompensatedSum re, im, re2, im2;
  for (const auto& p : parts) {
    re.add(p.re.value());
    im.add(p.im.value());
    re2.add(p.re2.value());
    im2.add(p.im2.value());
  }
  const auto count = static_cast<double>(samples);
  McEstimate est;
  est.samples = samples;
  est.seed = seed;
  est.workers = workers;
  est.mean = {re.value() / count, im.value() / count};
  if (samples > 1) {
    const double var_re = std::max(0.0, (re2.value() - count * est.mean.real() * est.mean.real()) / (count - 1));
    const double var_im = std::max(0.0, (im2.value() - count * est.mean.imag() * est.mean.imag()) / (count - 1));
    est.stderr_re = std::sqrt(var_re / count);
    est.stderr_im = std::sqrt(var_im / count);
    est.stderr = std::sqrt((var_re + var_im) / count);
  }
  return est;
}

}  // namespace jmwg
