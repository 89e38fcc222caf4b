#include "rccda/kl.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "rccda/rng.hpp"

namespace rccda {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kDensityFloor = 1e-300;

void check_weights(std::span<const double> w, std::size_t n) {
  if (w.size() != n) throw std::invalid_argument("MixtureKl: weight count must match domains");
  double sum = 0.0;
  for (double v : w) {
    if (v < -1e-12) throw std::invalid_argument("MixtureKl: negative weight");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("MixtureKl: weights must sum to 1");
}

}  // namespace

double gaussian_kl_isotropic(std::span<const double> mu_a, double var_a,
                             std::span<const double> mu_b, double var_b) {
  if (mu_a.size() != mu_b.size())
    throw std::invalid_argument("gaussian_kl_isotropic: dimension mismatch");
  if (var_a <= 0.0 || var_b <= 0.0)
    throw std::invalid_argument("gaussian_kl_isotropic: variances must be > 0");
  const double d = static_cast<double>(mu_a.size());
  double sq = 0.0;
  for (std::size_t i = 0; i < mu_a.size(); ++i) {
    const double diff = mu_a[i] - mu_b[i];
    sq += diff * diff;
  }
  return 0.5 * (d * std::log(var_b / var_a) + d * var_a / var_b + sq / var_b - d);
}

double domain_kl(const DomainSpec& a, const DomainSpec& b, std::span<const double> class_prior) {
  if (a.feature_dim != b.feature_dim || a.num_classes != b.num_classes)
    throw std::invalid_argument("domain_kl: domains must share feature_dim and num_classes");
  if (static_cast<int>(class_prior.size()) != a.num_classes)
    throw std::invalid_argument("domain_kl: prior length must equal num_classes");
  double prior_sum = 0.0;
  for (double p : class_prior) prior_sum += p;
  if (std::abs(prior_sum - 1.0) > 1e-9)
    throw std::invalid_argument("domain_kl: class prior must sum to 1");

  double kl = 0.0;
  for (int c = 0; c < a.num_classes; ++c)
    kl += class_prior[c] * gaussian_kl_isotropic(a.class_means[c], a.class_cov_scale,
                                                 b.class_means[c], b.class_cov_scale);
  return kl;
}

double discrete_kl_nats(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("discrete_kl_nats: support mismatch");
  double kl = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] <= 0.0) continue;
    if (b[i] <= 0.0) return std::numeric_limits<double>::infinity();
    kl += a[i] * std::log(a[i] / b[i]);
  }
  return kl < 0.0 && kl > -1e-12 ? 0.0 : kl;
}

MixtureKl::MixtureKl(std::vector<DomainSpec> domains, int grid_points, double tail_sigmas)
    : domains_(std::move(domains)), grid_points_(grid_points) {
  if (domains_.empty()) throw std::invalid_argument("MixtureKl: needs at least one domain");
  feature_dim_ = domains_[0].feature_dim;
  num_classes_ = domains_[0].num_classes;
  for (const auto& d : domains_) {
    d.validate();
    if (d.feature_dim != feature_dim_ || d.num_classes != num_classes_)
      throw std::invalid_argument("MixtureKl: domains must share shape");
  }
  if (feature_dim_ > 2) return;  // Monte Carlo path, no grid

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double max_sd = 0.0;
  for (const auto& d : domains_) {
    max_sd = std::max(max_sd, std::sqrt(d.class_cov_scale));
    for (const auto& mean : d.class_means)
      for (double v : mean) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
  }
  lo -= tail_sigmas * max_sd;
  hi += tail_sigmas * max_sd;

  const int side = feature_dim_ == 1
                       ? grid_points_
                       : static_cast<int>(std::floor(std::sqrt(static_cast<double>(grid_points_))));
  n_pts_ = feature_dim_ == 1 ? side : side * side;
  const double h = (hi - lo) / side;
  cell_volume_ = feature_dim_ == 1 ? h : h * h;

  dens_.assign(num_classes_, std::vector<double>(domains_.size() * n_pts_, 0.0));
  std::vector<double> x(feature_dim_);
  for (int p = 0; p < n_pts_; ++p) {
    if (feature_dim_ == 1) {
      x[0] = lo + (p + 0.5) * h;
    } else {
      x[0] = lo + (p % side + 0.5) * h;
      x[1] = lo + (p / side + 0.5) * h;
    }
    for (std::size_t d = 0; d < domains_.size(); ++d)
      for (int c = 0; c < num_classes_; ++c) dens_[c][d * n_pts_ + p] = density(d, c, x);
  }
}

double MixtureKl::density(int domain, int cls, std::span<const double> x) const {
  const auto& spec = domains_[domain];
  const double var = spec.class_cov_scale;
  const auto& mean = spec.class_means[cls];
  double sq = 0.0;
  for (int i = 0; i < feature_dim_; ++i) {
    const double diff = x[i] - mean[i];
    sq += diff * diff;
  }
  const double norm = std::pow(kTwoPi * var, -0.5 * feature_dim_);
  return norm * std::exp(-0.5 * sq / var);
}

double MixtureKl::kl_nats(std::span<const double> w_a, std::span<const double> w_b) const {
  check_weights(w_a, domains_.size());
  check_weights(w_b, domains_.size());
  bool same = true;
  for (std::size_t i = 0; i < w_a.size(); ++i)
    if (w_a[i] != w_b[i]) {
      same = false;
      break;
    }
  if (same) return 0.0;
  return feature_dim_ <= 2 ? grid_kl(w_a, w_b) : monte_carlo_kl(w_a, w_b);
}

double MixtureKl::grid_kl(std::span<const double> w_a, std::span<const double> w_b) const {
  double total = 0.0;
  for (int c = 0; c < num_classes_; ++c) {
    const auto& dens = dens_[c];
    double acc = 0.0;
    for (int p = 0; p < n_pts_; ++p) {
      double pa = 0.0;
      double pb = 0.0;
      for (std::size_t d = 0; d < domains_.size(); ++d) {
        const double g = dens[d * n_pts_ + p];
        pa += w_a[d] * g;
        pb += w_b[d] * g;
      }
      if (pa <= kDensityFloor) continue;
      acc += pa * std::log(pa / std::max(pb, kDensityFloor));
    }
    total += acc * cell_volume_;
  }
  total /= num_classes_;  // uniform class prior
  return total < 0.0 ? 0.0 : total;
}

double MixtureKl::monte_carlo_kl(std::span<const double> w_a, std::span<const double> w_b) const {
  // Deterministic importance estimate E_{x~p}[log p/q]; accuracy ~1e-2
  // relative for the sample count below. Only used for feature_dim >= 3.
  constexpr int kSamples = 200000;
  Rng rng = derive_stream(0x1234ABCD5678EF00ULL, StreamTag::kMisc, 0xM1X ^ 0);
  std::vector<double> x(feature_dim_);
  double acc = 0.0;
  for (int s = 0; s < kSamples; ++s) {
    // draw domain ~ w_a, class uniform, then the Gaussian
    double u = rng.next_double();
    std::size_t dom = 0;
    for (; dom + 1 < domains_.size(); ++dom) {
      if (u < w_a[dom]) break;
      u -= w_a[dom];
    }
    const int cls = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(num_classes_)));
    const auto& spec = domains_[dom];
    const double sd = std::sqrt(spec.class_cov_scale);
    for (int i = 0; i < feature_dim_; ++i)
      x[i] = spec.class_means[cls][i] + sd * rng.next_normal();
    double pa = 0.0;
    double pb = 0.0;
    for (std::size_t d = 0; d < domains_.size(); ++d) {
      double mix = 0.0;
      for (int c = 0; c < num_classes_; ++c) mix += density(d, c, x);
      mix /= num_classes_;
      pa += w_a[d] * mix;
      pb += w_b[d] * mix;
    }
    acc += std::log(std::max(pa, kDensityFloor) / std::max(pb, kDensityFloor));
  }
  const double kl = acc / kSamples;
  return kl < 0.0 ? 0.0 : kl;
}

std::vector<std::vector<double>> composition_trajectory(const DriftSchedule& schedule,
                                                        int num_domains, int initial_domain) {
  if (initial_domain < 0 || initial_domain >= num_domains)
    throw std::invalid_argument("composition_trajectory: initial_domain out of range");
  std::vector<std::vector<double>> traj;
  traj.reserve(schedule.horizon + 1);
  std::vector<double> w(num_domains, 0.0);
  w[initial_domain] = 1.0;
  traj.push_back(w);
  for (int t = 0; t < schedule.horizon; ++t) {
    const double r = drift_rate(schedule, t);
    if (r > 0.0) {
      const int dom = incoming_domain(schedule, t);
      for (double& v : w) v *= (1.0 - r);
      w[dom] += r;
    }
    traj.push_back(w);
  }
  return traj;
}

double schedule_kl(const DriftSchedule& schedule, const std::vector<DomainSpec>& domains,
                   int t, int initial_domain) {
  if (t < 0 || t >= schedule.horizon - 1 + 1)
    throw std::out_of_range("schedule_kl: step outside horizon");
  if (drift_rate(schedule, t) == 0.0) return 0.0;
  const auto traj = composition_trajectory(schedule, static_cast<int>(domains.size()),
                                           initial_domain);
  MixtureKl mix(domains);
  return nats_to_bits(mix.kl_nats(traj[t], traj[t + 1]));
}

}  // namespace rccda
