#pragma once

// Finite discrete laws: construction invariants, moments, standardization,
// characteristic-function derivatives, the symmetric three-point family, the
// extremal two-point law as a distribution, and a deterministic seeded
// random-law generator.

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sharpchf/moment_bounds.hpp"
#include "sharpchf/numerics.hpp"
#include "sharpchf/remainder.hpp"

namespace sharpchf {

struct Atom {
  double value;
  double weight;
};

/// Finite discrete law. Invariants enforced at construction: finite distinct
/// atom values sorted ascending, strictly positive weights summing to 1
/// within 1e-12. Zero-weight atoms are dropped and duplicate values merged.
class DiscreteDistribution {
 public:
  explicit DiscreteDistribution(std::vector<Atom> atoms) {
    for (const Atom& a : atoms) {
      if (!std::isfinite(a.value))
        throw std::invalid_argument("atom value must be finite");
      if (!std::isfinite(a.weight) || a.weight < 0.0)
        throw std::invalid_argument("atom weight must be finite and >= 0");
    }
    std::erase_if(atoms, [](const Atom& a) { return a.weight == 0.0; });
    if (atoms.empty())
      throw std::invalid_argument("law needs at least one atom");
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& a, const Atom& b) { return a.value < b.value; });
    atoms_.reserve(atoms.size());
    for (const Atom& a : atoms) {
      if (!atoms_.empty() && atoms_.back().value == a.value)
        atoms_.back().weight += a.weight;
      else
        atoms_.push_back(a);
    }
    detail::kahan_sum total;
    for (const Atom& a : atoms_) total.add(a.weight);
    if (std::abs(total.value() - 1.0) > 1e-12)
      throw std::invalid_argument("atom weights must sum to 1 (within 1e-12)");
  }

  const std::vector<Atom>& atoms() const { return atoms_; }

 private:
  std::vector<Atom> atoms_;
};

/// Moments up to order n_max: alpha[k-1] = E X^k, beta[k-1] = E |X|^k,
/// and b = beta_3 when n_max >= 3. Compensated summation throughout.
struct MomentProfile {
  std::vector<double> alpha;
  std::vector<double> beta;
  double b;
};

inline MomentProfile moments(const DiscreteDistribution& dist, int n_max) {
  if (n_max < 1) throw std::domain_error("n_max must be >= 1");
  MomentProfile mp;
  mp.alpha.resize(static_cast<std::size_t>(n_max));
  mp.beta.resize(static_cast<std::size_t>(n_max));
  for (int k = 1; k <= n_max; ++k) {
    detail::kahan_sum a;
    detail::kahan_sum ab;
    for (const Atom& at : dist.atoms()) {
      const double p = std::pow(at.value, k);
      a.add(at.weight * p);
      ab.add(at.weight * std::abs(p));
    }
    mp.alpha[static_cast<std::size_t>(k - 1)] = a.value();
    mp.beta[static_cast<std::size_t>(k - 1)] = ab.value();
  }
  mp.b = n_max >= 3 ? mp.beta[2] : 0.0;
  return mp;
}

/// Affinely rescale to mean 0 and variance 1. Throws on (numerically) zero
/// variance. Idempotent up to fp roundoff. The variance is accumulated in
/// centered form (a sum of nonnegative terms), which stays relatively
/// accurate even for laws whose atoms nearly coincide — the textbook
/// E X^2 - (E X)^2 form cancels catastrophically there.
inline DiscreteDistribution standardize(const DiscreteDistribution& dist) {
  detail::kahan_sum mean_acc;
  for (const Atom& a : dist.atoms()) mean_acc.add(a.weight * a.value);
  const double mean = mean_acc.value();
  detail::kahan_sum var_acc;
  for (const Atom& a : dist.atoms()) {
    const double d = a.value - mean;
    var_acc.add(a.weight * d * d);
  }
  const double var = var_acc.value();
  if (!(var > 0.0) || !std::isfinite(var))
    throw std::domain_error("cannot standardize a law with zero variance");
  const double sd = std::sqrt(var);
  std::vector<Atom> out;
  out.reserve(dist.atoms().size());
  for (const Atom& a : dist.atoms())
    out.push_back({(a.value - mean) / sd, a.weight});
  return DiscreteDistribution(std::move(out));
}

/// ell-th derivative of the characteristic function at t (exact finite sum):
///   f^(ell)(t) = sum_j w_j (i x_j)^ell e^{i t x_j}.
inline std::complex<double> chf(const DiscreteDistribution& dist, int ell,
                                double t) {
  if (ell < 0) throw std::domain_error("ell must be >= 0");
  detail::require_finite(t, "t");
  detail::kahan_sum re;
  detail::kahan_sum im;
  for (const Atom& a : dist.atoms()) {
    const double p = ell == 0 ? 1.0 : std::pow(a.value, ell);
    const double phase = t * a.value;
    re.add(a.weight * p * std::cos(phase));
    im.add(a.weight * p * std::sin(phase));
  }
  return detail::ipow(ell) * std::complex<double>(re.value(), im.value());
}

/// The standardized symmetric three-point law with atoms {-theta/|t|, 0,
/// +theta/|t|} and tail mass t^2/theta^2: the equality case of the
/// specialized bounds at angle theta. Requires 0 < |t| <= theta; at
/// |t| = theta the center atom has weight 0 and is dropped.
inline DiscreteDistribution symmetric_three_point(double theta, double t) {
  detail::require_finite(theta, "theta");
  if (!(theta > 0.0)) throw std::domain_error("theta must be > 0");
  detail::require_finite(t, "t");
  const double at = std::abs(t);
  if (!(at > 0.0) || at > theta)
    throw std::domain_error("need 0 < |t| <= theta");
  const double x = theta / at;
  const double mass = (t * t) / (theta * theta);
  return DiscreteDistribution(
      {{-x, 0.5 * mass}, {0.0, 1.0 - mass}, {x, 0.5 * mass}});
}

/// The extremal two-point law as a distribution.
inline DiscreteDistribution to_distribution(const TwoPointLaw& law) {
  return DiscreteDistribution({{law.atom_neg, law.weight_neg},
                               {law.atom_pos, law.weight_pos}});
}

namespace detail {

/// SplitMix64: tiny, seedable, high-quality 64-bit generator.
struct splitmix64 {
  std::uint64_t state;

  explicit splitmix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double u53() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }
};

}  // namespace detail

/// Deterministic seeded random law with n_atoms in [2, 16].
///
/// Generator recipe (fixed; documented so seeds are portable):
/// SplitMix64 stream from the seed; per atom, draw a = u53(): if a < 0.75
/// the value is 10*u53() - 5 (bounded), else sign = (u53() < 0.5 ? -1 : +1),
/// up = 1 - u53() in (0, 1], value = sign * 3 * (up^(-1/3) - 1) (heavy
/// tail, finite third moment scale); then n_atoms weights -ln(1 - u53()),
/// zero draws dropped, normalized to sum 1.
inline DiscreteDistribution random_law(std::uint64_t seed, int n_atoms) {
  if (n_atoms < 2 || n_atoms > 16)
    throw std::domain_error("n_atoms must lie in [2, 16]");
  detail::splitmix64 gen(seed);
  std::vector<double> values(static_cast<std::size_t>(n_atoms));
  for (double& v : values) {
    if (gen.u53() < 0.75) {
      v = 10.0 * gen.u53() - 5.0;
    } else {
      const double sign = gen.u53() < 0.5 ? -1.0 : 1.0;
      const double up = 1.0 - gen.u53();
      v = sign * 3.0 * (std::pow(up, -1.0 / 3.0) - 1.0);
    }
  }
  std::vector<double> weights(static_cast<std::size_t>(n_atoms));
  for (double& w : weights) w = -std::log(1.0 - gen.u53());
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i] > 0.0) total += weights[i];
  std::vector<Atom> atoms;
  atoms.reserve(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i] > 0.0) atoms.push_back({values[i], weights[i] / total});
  return DiscreteDistribution(std::move(atoms));
}

/// FNV-1a 64 over the sorted (value, weight) double bits; 16 hex chars.
/// Stable identifier for reports and logs.
inline std::string law_digest(const DiscreteDistribution& dist) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  const auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xffULL;
      h *= 0x100000001b3ULL;
    }
  };
  for (const Atom& a : dist.atoms()) {
    mix(std::bit_cast<std::uint64_t>(a.value));
    mix(std::bit_cast<std::uint64_t>(a.weight));
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace sharpchf
