#include "rccda/domain.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rccda {

namespace {

double sq_dist(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    d += diff * diff;
  }
  return d;
}

}  // namespace

void DomainSpec::validate() const {
  if (num_classes < 2) throw std::invalid_argument("DomainSpec: num_classes must be >= 2");
  if (feature_dim < 1) throw std::invalid_argument("DomainSpec: feature_dim must be >= 1");
  if (class_cov_scale <= 0.0) throw std::invalid_argument("DomainSpec: class_cov_scale must be > 0");
  if (static_cast<int>(class_means.size()) != num_classes)
    throw std::invalid_argument("DomainSpec: one mean required per class");
  for (const auto& mean : class_means)
    if (static_cast<int>(mean.size()) != feature_dim)
      throw std::invalid_argument("DomainSpec: mean length must equal feature_dim");
}

DomainSpec make_domain(int id, int num_classes, int feature_dim, double separation,
                       double cov_scale, std::uint64_t rng_seed) {
  if (num_classes < 2) throw std::invalid_argument("make_domain: num_classes must be >= 2");
  if (feature_dim < 1) throw std::invalid_argument("make_domain: feature_dim must be >= 1");
  if (separation <= 0.0) throw std::invalid_argument("make_domain: separation must be > 0");
  if (cov_scale <= 0.0) throw std::invalid_argument("make_domain: cov_scale must be > 0");

  Rng rng = derive_stream(rng_seed, StreamTag::kMisc, static_cast<std::uint64_t>(id) + 0x5D0);
  const double min_sq = separation * separation;
  double radius = separation * std::max(1.0, std::pow(static_cast<double>(num_classes), 1.0 / feature_dim));

  DomainSpec spec;
  spec.id = id;
  spec.class_cov_scale = cov_scale;
  spec.num_classes = num_classes;
  spec.feature_dim = feature_dim;

  for (int attempt = 0; attempt < 10000; ++attempt) {
    if (attempt > 0 && attempt % 20 == 0) radius *= 1.15;  // widen if crowded
    std::vector<std::vector<double>> means;
    means.reserve(num_classes);
    bool ok = true;
    for (int c = 0; c < num_classes && ok; ++c) {
      std::vector<double> m(feature_dim);
      for (auto& v : m) v = rng.next_uniform(-radius, radius);
      for (const auto& prev : means)
        if (sq_dist(prev, m) < min_sq) {
          ok = false;
          break;
        }
      if (ok) means.push_back(std::move(m));
    }
    if (ok) {
      spec.class_means = std::move(means);
      spec.validate();
      return spec;
    }
  }
  throw std::runtime_error("make_domain: failed to place class means with requested separation");
}

LabeledSample sample_from_domain(const DomainSpec& domain, Rng& rng) {
  LabeledSample s;
  s.y = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(domain.num_classes)));
  s.x.resize(domain.feature_dim);
  const double sd = std::sqrt(domain.class_cov_scale);
  const auto& mean = domain.class_means[s.y];
  for (int i = 0; i < domain.feature_dim; ++i) s.x[i] = mean[i] + sd * rng.next_normal();
  return s;
}

double derive_data_bound(const std::vector<DomainSpec>& domains, double sigmas) {
  double bound = 1.0;
  for (const auto& d : domains) {
    const double radius = sigmas * std::sqrt(d.class_cov_scale * d.feature_dim);
    for (const auto& mean : d.class_means) {
      bound = std::max(bound, std::sqrt(sq_dist(mean, std::vector<double>(mean.size(), 0.0))) + radius);
    }
  }
  return bound;
}

}  // namespace rccda
