#pragma once
// Domains: class-conditional isotropic Gaussians. Each domain fixes one
// set of class means; drifting between domains changes Pr(y|x).

#include <vector>

#include "rccda/rng.hpp"

namespace rccda {

struct LabeledSample {
  std::vector<double> x;
  int y = 0;
};

struct DomainSpec {
  int id = 0;
  std::vector<std::vector<double>> class_means;  // one mean per class
  double class_cov_scale = 1.0;                  // isotropic variance
  int num_classes = 0;
  int feature_dim = 0;

  void validate() const;
};

// Places class means at random points with pairwise distance >= separation.
// Deterministic for a fixed seed.
DomainSpec make_domain(int id, int num_classes, int feature_dim, double separation,
                       double cov_scale, std::uint64_t rng_seed);

// One sample with a uniformly drawn class label.
LabeledSample sample_from_domain(const DomainSpec& domain, Rng& rng);

// Largest feature norm the domain set plausibly produces (mean norm plus a
// k-sigma radius); feeds the smoothness-constant estimate.
double derive_data_bound(const std::vector<DomainSpec>& domains, double sigmas = 5.0);

}  // namespace rccda
