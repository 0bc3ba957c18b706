#pragma once

#include <vector>

#include "ruinbound/rng.hpp"

namespace ruinbound {

enum class DistKind { Poisson, Gamma, Deterministic, FiniteDiscrete };

struct DiscreteAtom {
  double value = 0.0;
  double prob = 0.0;
};

// Parametric law of a nonnegative random variable with a closed-form MGF,
// mean, and sampler. Immutable after construction; safe to share across
// threads. Gamma uses the rate parameterization (density ~ x^{a-1} e^{-b x}).
class DistributionSpec {
 public:
  static DistributionSpec poisson(double rate);
  static DistributionSpec gamma(double shape, double rate);
  static DistributionSpec deterministic(double value);
  static DistributionSpec finite_discrete(std::vector<DiscreteAtom> atoms);

  DistKind kind() const noexcept { return kind_; }
  double rate() const noexcept { return rate_; }    // Poisson / Gamma
  double shape() const noexcept { return shape_; }  // Gamma
  double value() const noexcept { return value_; }  // Deterministic
  const std::vector<DiscreteAtom>& atoms() const noexcept { return atoms_; }

 private:
  DistributionSpec(DistKind kind, double shape, double rate, double value,
                   std::vector<DiscreteAtom> atoms);

  DistKind kind_;
  double shape_ = 0.0;
  double rate_ = 0.0;
  double value_ = 0.0;
  std::vector<DiscreteAtom> atoms_;
};

// E[e^{tX}]. Divergence outside the MGF domain is reported in-band as
// +infinity rather than an error, so root-finders may probe the boundary
// freely. Exactly 1 at t = 0.
double mgf(const DistributionSpec& spec, double t);

// log E[e^{tX}] with the same domain convention; overflow-resistant form
// used by the adjustment solver. Exactly 0 at t = 0.
double log_mgf(const DistributionSpec& spec, double t);

// sup{t : mgf(spec, t) < infinity}: the Gamma rate, +infinity otherwise.
double mgf_domain_sup(const DistributionSpec& spec);

double mean(const DistributionSpec& spec);
double variance(const DistributionSpec& spec);

// One variate from the law. Poisson uses inversion by sequential search
// (rates above 10 are split additively); Gamma uses Marsaglia-Tsang with the
// power boost for shape < 1.
double sample(const DistributionSpec& spec, RngStream& stream);

double sample_standard_normal(RngStream& stream);

}  // namespace ruinbound
