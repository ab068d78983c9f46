#pragma once

#include <bdsym/core.hpp>

#include <cstddef>
#include <set>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace bdsym {

/// Finite prefix alpha^0 .. alpha^K of a mask sequence. An empty prefix has K = -1.
class SchedulePrefix {
 public:
  explicit SchedulePrefix(int n, std::vector<State> steps = {});

  int dim() const noexcept { return n_; }
  int horizon() const noexcept { return static_cast<int>(steps_.size()) - 1; }
  std::size_t size() const noexcept { return steps_.size(); }
  const State& operator[](std::size_t k) const { return steps_[k]; }
  const std::vector<State>& steps() const noexcept { return steps_; }

  bool operator==(const SchedulePrefix&) const = default;

 private:
  int n_;
  std::vector<State> steps_;
};

/// A schedule whose k-th mask fires at times()[k]; times strictly increase.
class TimedSchedule {
 public:
  TimedSchedule(SchedulePrefix schedule, std::vector<double> times);

  const SchedulePrefix& schedule() const noexcept { return schedule_; }
  const std::vector<double>& times() const noexcept { return times_; }
  int dim() const noexcept { return schedule_.dim(); }

  bool operator==(const TimedSchedule&) const = default;

 private:
  SchedulePrefix schedule_;
  std::vector<double> times_;
};

/// values()[0] is x_{-1} = mu, values()[k + 1] is x_k.
class OrbitPrefix {
 public:
  explicit OrbitPrefix(std::vector<State> values);

  const State& start() const { return values_.front(); }
  /// Value at discrete time k >= -1.
  const State& at(int k) const { return values_.at(static_cast<std::size_t>(k + 1)); }
  int horizon() const noexcept { return static_cast<int>(values_.size()) - 2; }
  const std::vector<State>& values() const noexcept { return values_; }
  int dim() const { return start().dim(); }

  bool operator==(const OrbitPrefix&) const = default;
  auto operator<=>(const OrbitPrefix& o) const { return values_ <=> o.values_; }

 private:
  std::vector<State> values_;
};

/// Piecewise-constant signal: initial() on (-inf, t_0), then the breakpoint value
/// on [t_k, t_{k+1}); the last value persists.
class PiecewiseSignal {
 public:
  PiecewiseSignal(State initial, std::vector<std::pair<double, State>> breakpoints);

  const State& initial() const noexcept { return initial_; }
  const std::vector<std::pair<double, State>>& breakpoints() const noexcept { return breakpoints_; }
  State at(double t) const;

  bool operator==(const PiecewiseSignal&) const = default;

 private:
  State initial_;
  std::vector<std::pair<double, State>> breakpoints_;
};

/// Consecutive duplicates merged.
std::vector<std::uint32_t> stutter_collapse(std::span<const State> values);

enum class SystemMode { Forward, Anti };

struct SystemPrefixSet {
  int n = 0;
  int horizon = -1;
  std::set<std::vector<std::uint32_t>> sequences;

  bool operator==(const SystemPrefixSet&) const = default;
};

inline constexpr std::size_t kDefaultBranchCap = std::size_t{1} << 20;
inline constexpr std::uint64_t kDefaultEnumerationGuard = std::uint64_t{1} << 24;

OrbitPrefix discrete_orbit(const TruthTable& phi, const State& mu, const SchedulePrefix& alpha);
PiecewiseSignal continuous_orbit(const TruthTable& phi, const State& mu, const TimedSchedule& rho);

/// {y : Phi^nu(y) = x}.
std::vector<State> preimages_nu(const TruthTable& phi, const State& nu, const State& x);

/// All backward branches (mu, y_0, ..., y_K) with Phi^{alpha^k}(y_k) = y_{k-1}, sorted.
std::vector<OrbitPrefix> anti_orbit_branches(const TruthTable& phi, const State& mu, const SchedulePrefix& alpha,
                                             std::size_t branch_cap = kDefaultBranchCap);
bool is_anti_orbit(const TruthTable& phi, const SchedulePrefix& alpha, const OrbitPrefix& seq);
PiecewiseSignal continuous_anti_orbit(const TruthTable& phi, const OrbitPrefix& branch, const TimedSchedule& rho);

SchedulePrefix lift_hat(const BijectionTable& g, const SchedulePrefix& alpha);
/// Event values map through g except the all-zero event, which stays zero.
TimedSchedule lift_tilde(const BijectionTable& g, const TimedSchedule& rho);

SystemPrefixSet system_prefixes(const TruthTable& phi, int horizon, SystemMode mode,
                                std::uint64_t guard = kDefaultEnumerationGuard);

/// Schedule file: "n=<int>" then "<t> <bits>" lines (timed) or "<bits>" lines (untimed).
std::variant<SchedulePrefix, TimedSchedule> parse_schedule(std::string_view text);

}  // namespace bdsym
