#pragma once
// Drift schedules: when data arrives, how much of the pool it replaces, and
// which domain it comes from.
//
//   Constant  r(t) = 0 everywhere
//   Burst     large replacement fractions at listed event times
//   Step      zero until onset, then a constant low rate
//   Wave      low rate during the first `duty` steps of each period
//   Spikes    seeded random single-step events with random rates
//
// Incoming domains cycle through `incoming_domains` per event (Burst/Spikes)
// or per period (Step/Wave).

#include <cstdint>
#include <string>
#include <vector>

namespace rccda {

enum class ScheduleKind { kConstant, kBurst, kStep, kWave, kSpikes };

struct DriftSchedule {
  ScheduleKind kind = ScheduleKind::kConstant;
  int horizon = 0;

  std::vector<int> event_times;  // Burst
  std::vector<double> rates;     // Burst: per event; Step/Wave: rates[0]
  int onset = 0;                 // Step/Wave phase start
  int period = 0;                // Wave cycle; Step/Wave domain-switch cadence
  int duty = 0;                  // Wave: drifting steps per period

  std::vector<int> incoming_domains;

  // Spikes
  int num_events = 0;
  double r_min = 0.0;
  double r_max = 0.0;
  std::uint64_t seed = 0;

  void validate() const;

  // Lazily built for Spikes: event time -> rate.
  const std::vector<std::pair<int, double>>& spike_events() const;

 private:
  mutable std::vector<std::pair<int, double>> spikes_;
  mutable bool spikes_built_ = false;
};

// Replacement fraction in [0,1] applied when advancing from step t to t+1.
// Rejects t outside [0, horizon).
double drift_rate(const DriftSchedule& schedule, int t);

// Domain feeding the pool at step t (meaningful when drift_rate(t) > 0).
int incoming_domain(const DriftSchedule& schedule, int t);

std::string to_string(ScheduleKind kind);
ScheduleKind schedule_kind_from_string(const std::string& name);

}  // namespace rccda
