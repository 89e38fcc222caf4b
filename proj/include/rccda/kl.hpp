#pragma once
// KL divergences between domain distributions.
//
// Unit conventions, fixed project-wide:
//   * gaussian_kl_isotropic / domain_kl / MixtureKl::kl_nats return NATS.
//   * delta(t) -- the per-step drift magnitude consumed by the bound
//     oracles -- is in BITS (log base 2). The Pinsker factors sqrt(2 ln2 *
//     delta) in the bounds assume base-2 KL; sqrt(2 ln2 * delta_bits) equals
//     sqrt(2 * delta_nats).
//
// Consecutive-step mixtures share components (only domain weights change), so
// the exact mixture KL has no closed form; it is evaluated by grid quadrature
// (feature_dim <= 2) or seeded Monte Carlo (higher dims).

#include <span>
#include <vector>

#include "rccda/domain.hpp"
#include "rccda/schedule.hpp"

namespace rccda {

inline constexpr double kLn2 = 0.6931471805599453094172321214581766;

inline double nats_to_bits(double nats) { return nats / kLn2; }

// KL(N(mu_a, var_a I) || N(mu_b, var_b I)) in nats, closed form.
double gaussian_kl_isotropic(std::span<const double> mu_a, double var_a,
                             std::span<const double> mu_b, double var_b);

// Class-prior-weighted sum of per-class Gaussian KLs, in nats.
double domain_kl(const DomainSpec& a, const DomainSpec& b, std::span<const double> class_prior);

// KL(a || b) for discrete distributions on a shared support, in nats.
// Returns +inf when b has a zero where a does not.
double discrete_kl_nats(std::span<const double> a, std::span<const double> b);

// Exact KL between two domain mixtures sharing components. Class priors are
// uniform. Grid densities are precomputed once per domain set, so repeated
// weight-pair evaluations are cheap.
class MixtureKl {
 public:
  MixtureKl(std::vector<DomainSpec> domains, int grid_points = 10000,
            double tail_sigmas = 6.0);

  // KL(mix(w_a) || mix(w_b)) in nats. Weights are per-domain and sum to 1.
  double kl_nats(std::span<const double> w_a, std::span<const double> w_b) const;

  int feature_dim() const { return feature_dim_; }

 private:
  double grid_kl(std::span<const double> w_a, std::span<const double> w_b) const;
  double monte_carlo_kl(std::span<const double> w_a, std::span<const double> w_b) const;
  double density(int domain, int cls, std::span<const double> x) const;

  std::vector<DomainSpec> domains_;
  int feature_dim_ = 0;
  int num_classes_ = 0;
  int grid_points_ = 0;
  double cell_volume_ = 0.0;
  // dens_[cls][domain * n_pts + point]
  std::vector<std::vector<double>> dens_;
  int n_pts_ = 0;
};

// Deterministic schedule-level composition trajectory: w(0) is pure
// initial_domain; w(t+1) = (1 - r(t)) w(t) + r(t) e_incoming(t).
std::vector<std::vector<double>> composition_trajectory(const DriftSchedule& schedule,
                                                        int num_domains, int initial_domain);

// Ground-truth delta(t) in BITS for the schedule-level trajectory: the exact
// KL between the mixture at t and at t+1. Zero exactly when drift_rate is 0.
double schedule_kl(const DriftSchedule& schedule, const std::vector<DomainSpec>& domains,
                   int t, int initial_domain = 0);

}  // namespace rccda
