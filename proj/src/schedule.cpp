#include "rccda/schedule.hpp"

#include <algorithm>
#include <stdexcept>

#include "rccda/rng.hpp"

namespace rccda {

void DriftSchedule::validate() const {
  if (horizon < 1) throw std::invalid_argument("DriftSchedule: horizon must be >= 1");
  for (double r : rates)
    if (r < 0.0 || r > 1.0) throw std::invalid_argument("DriftSchedule: rates must be in [0,1]");
  switch (kind) {
    case ScheduleKind::kConstant:
      break;
    case ScheduleKind::kBurst: {
      if (event_times.size() != rates.size())
        throw std::invalid_argument("DriftSchedule: one rate required per burst event");
      for (std::size_t i = 0; i < event_times.size(); ++i) {
        if (event_times[i] < 0 || event_times[i] >= horizon)
          throw std::invalid_argument("DriftSchedule: event times must lie in [0, horizon)");
        if (i > 0 && event_times[i] <= event_times[i - 1])
          throw std::invalid_argument("DriftSchedule: event times must be strictly increasing");
      }
      if (incoming_domains.empty())
        throw std::invalid_argument("DriftSchedule: burst needs incoming domains");
      break;
    }
    case ScheduleKind::kStep:
      if (rates.empty()) throw std::invalid_argument("DriftSchedule: step needs a rate");
      if (onset < 0 || onset >= horizon)
        throw std::invalid_argument("DriftSchedule: onset must lie in [0, horizon)");
      if (incoming_domains.empty())
        throw std::invalid_argument("DriftSchedule: step needs incoming domains");
      break;
    case ScheduleKind::kWave:
      if (rates.empty()) throw std::invalid_argument("DriftSchedule: wave needs a rate");
      if (period < 1) throw std::invalid_argument("DriftSchedule: wave needs period >= 1");
      if (duty < 1 || duty > period)
        throw std::invalid_argument("DriftSchedule: wave duty must lie in [1, period]");
      if (incoming_domains.empty())
        throw std::invalid_argument("DriftSchedule: wave needs incoming domains");
      break;
    case ScheduleKind::kSpikes:
      if (num_events < 1) throw std::invalid_argument("DriftSchedule: spikes needs num_events >= 1");
      if (num_events > horizon)
        throw std::invalid_argument("DriftSchedule: more spike events than steps");
      if (r_min < 0.0 || r_max > 1.0 || r_min > r_max)
        throw std::invalid_argument("DriftSchedule: spike rate range must satisfy 0 <= r_min <= r_max <= 1");
      if (incoming_domains.empty())
        throw std::invalid_argument("DriftSchedule: spikes needs incoming domains");
      break;
  }
}

const std::vector<std::pair<int, double>>& DriftSchedule::spike_events() const {
  if (!spikes_built_) {
    // Event times drawn without replacement from [0, horizon); rates uniform
    // in [r_min, r_max]. Entirely determined by the schedule seed.
    Rng rng = derive_stream(seed, StreamTag::kMisc, 0x5B1CE5ULL);
    std::vector<int> all(horizon);
    for (int i = 0; i < horizon; ++i) all[i] = i;
    for (int i = 0; i < num_events; ++i) {
      const auto j = i + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(horizon - i)));
      std::swap(all[i], all[j]);
    }
    std::vector<int> times(all.begin(), all.begin() + num_events);
    std::sort(times.begin(), times.end());
    spikes_.reserve(num_events);
    for (int t : times) spikes_.emplace_back(t, rng.next_uniform(r_min, r_max));
    spikes_built_ = true;
  }
  return spikes_;
}

double drift_rate(const DriftSchedule& schedule, int t) {
  if (t < 0 || t >= schedule.horizon)
    throw std::out_of_range("drift_rate: step outside horizon");
  switch (schedule.kind) {
    case ScheduleKind::kConstant:
      return 0.0;
    case ScheduleKind::kBurst: {
      for (std::size_t i = 0; i < schedule.event_times.size(); ++i)
        if (schedule.event_times[i] == t) return schedule.rates[i];
      return 0.0;
    }
    case ScheduleKind::kStep:
      return t >= schedule.onset ? schedule.rates[0] : 0.0;
    case ScheduleKind::kWave: {
      if (t < schedule.onset) return 0.0;
      return ((t - schedule.onset) % schedule.period) < schedule.duty ? schedule.rates[0] : 0.0;
    }
    case ScheduleKind::kSpikes: {
      for (const auto& [time, rate] : schedule.spike_events())
        if (time == t) return rate;
      return 0.0;
    }
  }
  return 0.0;
}

int incoming_domain(const DriftSchedule& schedule, int t) {
  if (t < 0 || t >= schedule.horizon)
    throw std::out_of_range("incoming_domain: step outside horizon");
  const auto& doms = schedule.incoming_domains;
  if (doms.empty()) return 0;
  switch (schedule.kind) {
    case ScheduleKind::kConstant:
      return doms[0];
    case ScheduleKind::kBurst: {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < schedule.event_times.size(); ++i)
        if (schedule.event_times[i] <= t) idx = i;
      return doms[idx % doms.size()];
    }
    case ScheduleKind::kStep: {
      if (t < schedule.onset || schedule.period < 1) return doms[0];
      const int phase = (t - schedule.onset) / schedule.period;
      return doms[static_cast<std::size_t>(phase) % doms.size()];
    }
    case ScheduleKind::kWave: {
      if (t < schedule.onset) return doms[0];
      const int cycle = (t - schedule.onset) / schedule.period;
      return doms[static_cast<std::size_t>(cycle) % doms.size()];
    }
    case ScheduleKind::kSpikes: {
      std::size_t idx = 0;
      const auto& events = schedule.spike_events();
      for (std::size_t i = 0; i < events.size(); ++i)
        if (events[i].first <= t) idx = i;
      return doms[idx % doms.size()];
    }
  }
  return doms[0];
}

std::string to_string(ScheduleKind kind) {
  switch (kind) {
    case ScheduleKind::kConstant: return "constant";
    case ScheduleKind::kBurst: return "burst";
    case ScheduleKind::kStep: return "step";
    case ScheduleKind::kWave: return "wave";
    case ScheduleKind::kSpikes: return "spikes";
  }
  return "constant";
}

ScheduleKind schedule_kind_from_string(const std::string& name) {
  if (name == "constant") return ScheduleKind::kConstant;
  if (name == "burst") return ScheduleKind::kBurst;
  if (name == "step") return ScheduleKind::kStep;
  if (name == "wave") return ScheduleKind::kWave;
  if (name == "spikes") return ScheduleKind::kSpikes;
  throw std::invalid_argument("unknown schedule kind: " + name);
}

}  // namespace rccda
