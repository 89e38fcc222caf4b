#include "rccda/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rccda {

namespace {

// First m entries of a Fisher-Yates shuffle over [0, n).
std::vector<int> choose_indices(int n, int m, Rng& rng) {
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  for (int i = 0; i < m; ++i) {
    const int j = i + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - i)));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(m);
  return idx;
}

void replace_entries(std::vector<LabeledSample>& data, std::vector<int>& tags,
                     const DomainSpec& incoming, int count, Rng& rng) {
  const auto idx = choose_indices(static_cast<int>(data.size()), count, rng);
  for (int i : idx) {
    data[i] = sample_from_domain(incoming, rng);
    tags[i] = incoming.id;
  }
}

}  // namespace

void DatasetState::recompute_composition(int num_domains) {
  composition.assign(num_domains, 0.0);
  for (int tag : pool_domain) composition[tag] += 1.0;
  const double n = static_cast<double>(pool.size());
  for (double& c : composition) c /= n;
}

DatasetState init_dataset(const std::vector<DomainSpec>& domains, int pool_size,
                          int holdout_size, int initial_domain, Rng& rng) {
  if (pool_size < 1 || holdout_size < 1)
    throw std::invalid_argument("init_dataset: pool and holdout must be non-empty");
  if (initial_domain < 0 || initial_domain >= static_cast<int>(domains.size()))
    throw std::invalid_argument("init_dataset: initial_domain out of range");

  DatasetState ds;
  ds.pool.reserve(pool_size);
  ds.pool_domain.assign(pool_size, initial_domain);
  for (int i = 0; i < pool_size; ++i) ds.pool.push_back(sample_from_domain(domains[initial_domain], rng));
  ds.holdout.reserve(holdout_size);
  ds.holdout_domain.assign(holdout_size, initial_domain);
  for (int i = 0; i < holdout_size; ++i)
    ds.holdout.push_back(sample_from_domain(domains[initial_domain], rng));
  ds.recompute_composition(static_cast<int>(domains.size()));
  return ds;
}

AdvanceInfo advance(DatasetState& ds, const DriftSchedule& schedule,
                    const std::vector<DomainSpec>& domains, int t, Rng& pool_rng,
                    Rng& holdout_rng) {
  if (ds.t != t) throw std::invalid_argument("advance: dataset step mismatch");

  AdvanceInfo info;
  info.composition_before = ds.composition;

  const double rate = drift_rate(schedule, t);
  const int m_pool = static_cast<int>(std::floor(rate * static_cast<double>(ds.pool.size())));
  const int m_holdout = static_cast<int>(std::floor(rate * static_cast<double>(ds.holdout.size())));

  if (m_pool > 0 || m_holdout > 0) {
    const int dom = incoming_domain(schedule, t);
    if (dom < 0 || dom >= static_cast<int>(domains.size()))
      throw std::invalid_argument("advance: incoming domain out of range");
    if (m_pool > 0) replace_entries(ds.pool, ds.pool_domain, domains[dom], m_pool, pool_rng);
    if (m_holdout > 0)
      replace_entries(ds.holdout, ds.holdout_domain, domains[dom], m_holdout, holdout_rng);
    ds.recompute_composition(static_cast<int>(domains.size()));
  }

  ds.t += 1;
  info.replaced_pool = m_pool;
  info.replaced_holdout = m_holdout;
  info.composition_after = ds.composition;
  return info;
}

std::vector<LabeledSample> sample_batch(const DatasetState& ds, int size, Rng& rng) {
  const int n = static_cast<int>(ds.pool.size());
  if (size < 1 || size > n) throw std::invalid_argument("sample_batch: size out of range");
  const auto idx = choose_indices(n, size, rng);
  std::vector<LabeledSample> batch;
  batch.reserve(size);
  for (int i : idx) batch.push_back(ds.pool[i]);
  return batch;
}

}  // namespace rccda
