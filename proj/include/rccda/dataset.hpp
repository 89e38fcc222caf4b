#pragma once
// The drifting data pool. Pool and holdout have fixed sizes; drift replaces a
// uniformly chosen fraction of entries with samples from the incoming domain.
// `composition` always equals exact per-domain counts / pool size.

#include <span>
#include <vector>

#include "rccda/domain.hpp"
#include "rccda/schedule.hpp"

namespace rccda {

struct DatasetState {
  std::vector<LabeledSample> pool;
  std::vector<int> pool_domain;  // domain tag per pool entry
  std::vector<LabeledSample> holdout;
  std::vector<int> holdout_domain;
  std::vector<double> composition;  // indexed by domain id
  int t = 0;

  void recompute_composition(int num_domains);
};

DatasetState init_dataset(const std::vector<DomainSpec>& domains, int pool_size,
                          int holdout_size, int initial_domain, Rng& rng);

// Record of one advance, for digests and tests.
struct AdvanceInfo {
  int replaced_pool = 0;
  int replaced_holdout = 0;
  std::vector<double> composition_before;
  std::vector<double> composition_after;
};

// Replaces floor(rate * |pool|) uniformly chosen pool entries (and the
// proportional count in the holdout, from an independent stream) with fresh
// samples from the schedule's incoming domain at t. Identity when rate is 0:
// no rng is consumed. Requires ds.t == t.
AdvanceInfo advance(DatasetState& ds, const DriftSchedule& schedule,
                    const std::vector<DomainSpec>& domains, int t, Rng& pool_rng,
                    Rng& holdout_rng);

// Uniform sample without replacement; 1 <= size <= |pool|.
std::vector<LabeledSample> sample_batch(const DatasetState& ds, int size, Rng& rng);

}  // namespace rccda
