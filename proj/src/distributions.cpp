#include "ruinbound/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ruinbound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

DistributionSpec::DistributionSpec(DistKind kind, double shape, double rate,
                                   double value,
                                   std::vector<DiscreteAtom> atoms)
    : kind_(kind),
      shape_(shape),
      rate_(rate),
      value_(value),
      atoms_(std::move(atoms)) {}

DistributionSpec DistributionSpec::poisson(double rate) {
  require(std::isfinite(rate) && rate > 0.0, "poisson: rate must be > 0");
  return DistributionSpec(DistKind::Poisson, 0.0, rate, 0.0, {});
}

DistributionSpec DistributionSpec::gamma(double shape, double rate) {
  require(std::isfinite(shape) && shape > 0.0, "gamma: shape must be > 0");
  require(std::isfinite(rate) && rate > 0.0, "gamma: rate must be > 0");
  return DistributionSpec(DistKind::Gamma, shape, rate, 0.0, {});
}

DistributionSpec DistributionSpec::deterministic(double value) {
  require(std::isfinite(value) && value >= 0.0,
          "deterministic: value must be >= 0");
  return DistributionSpec(DistKind::Deterministic, 0.0, 0.0, value, {});
}

DistributionSpec DistributionSpec::finite_discrete(
    std::vector<DiscreteAtom> atoms) {
  require(!atoms.empty(), "finite_discrete: at least one atom required");
  double total = 0.0;
  for (const auto& a : atoms) {
    require(std::isfinite(a.value) && a.value >= 0.0,
            "finite_discrete: atom values must be >= 0");
    require(std::isfinite(a.prob) && a.prob > 0.0,
            "finite_discrete: atom probabilities must be > 0");
    total += a.prob;
  }
  require(std::abs(total - 1.0) <= 1e-12,
          "finite_discrete: probabilities must sum to 1 within 1e-12");
  return DistributionSpec(DistKind::FiniteDiscrete, 0.0, 0.0, 0.0,
                          std::move(atoms));
}

double log_mgf(const DistributionSpec& spec, double t) {
  if (t == 0.0) return 0.0;
  switch (spec.kind()) {
    case DistKind::Poisson:
      return spec.rate() * std::expm1(t);
    case DistKind::Gamma:
      if (t >= spec.rate()) return kInf;
      return -spec.shape() * std::log1p(-t / spec.rate());
    case DistKind::Deterministic:
      return t * spec.value();
    case DistKind::FiniteDiscrete: {
      // log sum exp over atoms, shifted by the largest exponent
      double max_term = -kInf;
      for (const auto& a : spec.atoms())
        max_term = std::max(max_term, t * a.value + std::log(a.prob));
      double sum = 0.0;
      for (const auto& a : spec.atoms())
        sum += std::exp(t * a.value + std::log(a.prob) - max_term);
      return max_term + std::log(sum);
    }
  }
  return kInf;
}

double mgf(const DistributionSpec& spec, double t) {
  if (t == 0.0) return 1.0;
  switch (spec.kind()) {
    case DistKind::Poisson:
      return std::exp(spec.rate() * std::expm1(t));
    case DistKind::Gamma:
      if (t >= spec.rate()) return kInf;
      return std::pow(1.0 - t / spec.rate(), -spec.shape());
    case DistKind::Deterministic:
      return std::exp(t * spec.value());
    case DistKind::FiniteDiscrete: {
      double sum = 0.0;
      for (const auto& a : spec.atoms()) sum += a.prob * std::exp(t * a.value);
      return sum;
    }
  }
  return kInf;
}

double mgf_domain_sup(const DistributionSpec& spec) {
  return spec.kind() == DistKind::Gamma ? spec.rate() : kInf;
}

double mean(const DistributionSpec& spec) {
  switch (spec.kind()) {
    case DistKind::Poisson:
      return spec.rate();
    case DistKind::Gamma:
      return spec.shape() / spec.rate();
    case DistKind::Deterministic:
      return spec.value();
    case DistKind::FiniteDiscrete: {
      double m = 0.0;
      for (const auto& a : spec.atoms()) m += a.prob * a.value;
      return m;
    }
  }
  return 0.0;
}

double variance(const DistributionSpec& spec) {
  switch (spec.kind()) {
    case DistKind::Poisson:
      return spec.rate();
    case DistKind::Gamma:
      return spec.shape() / (spec.rate() * spec.rate());
    case DistKind::Deterministic:
      return 0.0;
    case DistKind::FiniteDiscrete: {
      double m = mean(spec);
      double m2 = 0.0;
      for (const auto& a : spec.atoms()) m2 += a.prob * a.value * a.value;
      return m2 - m * m;
    }
  }
  return 0.0;
}

double sample_standard_normal(RngStream& stream) {
  // Box-Muller, cosine branch; next_unit() never returns 0
  double u1 = stream.next_unit();
  double u2 = stream.next_unit();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

namespace {

// Inversion by sequential search; intended for rate <= 10.
double sample_poisson_small(double rate, RngStream& stream) {
  double u = stream.next_unit();
  double p = std::exp(-rate);
  double cum = p;
  int k = 0;
  while (u > cum && k < 2000) {
    ++k;
    p *= rate / k;
    cum += p;
  }
  return static_cast<double>(k);
}

double sample_poisson(double rate, RngStream& stream) {
  if (rate <= 10.0) return sample_poisson_small(rate, stream);
  // split additively so each component stays in the sequential-search regime
  int parts = static_cast<int>(std::ceil(rate / 10.0));
  double part_rate = rate / parts;
  double total = 0.0;
  for (int i = 0; i < parts; ++i)
    total += sample_poisson_small(part_rate, stream);
  return total;
}

// Marsaglia-Tsang for shape >= 1, unit rate.
double sample_gamma_unit(double shape, RngStream& stream) {
  double d = shape - 1.0 / 3.0;
  double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = sample_standard_normal(stream);
    double v = 1.0 + c * x;
    if (v <= 0.0) continue;
    v = v * v * v;
    double u = stream.next_unit();
    double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double sample_gamma(double shape, double rate, RngStream& stream) {
  if (shape >= 1.0) return sample_gamma_unit(shape, stream) / rate;
  // boost from shape + 1 back down: X = G(shape+1) * U^{1/shape}
  double g = sample_gamma_unit(shape + 1.0, stream);
  double u = stream.next_unit();
  return g * std::pow(u, 1.0 / shape) / rate;
}

double sample_finite_discrete(const std::vector<DiscreteAtom>& atoms,
                              RngStream& stream) {
  double u = stream.next_unit();
  double cum = 0.0;
  for (const auto& a : atoms) {
    cum += a.prob;
    if (u <= cum) return a.value;
  }
  return atoms.back().value;
}

}  // namespace

double sample(const DistributionSpec& spec, RngStream& stream) {
  switch (spec.kind()) {
    case DistKind::Poisson:
      return sample_poisson(spec.rate(), stream);
    case DistKind::Gamma:
      return sample_gamma(spec.shape(), spec.rate(), stream);
    case DistKind::Deterministic:
      return spec.value();
    case DistKind::FiniteDiscrete:
      return sample_finite_discrete(spec.atoms(), stream);
  }
  return 0.0;
}

}  // namespace ruinbound
