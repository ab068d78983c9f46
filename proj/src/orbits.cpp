#include <bdsym/orbits.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>

#include "checks.hpp"
#include "text_records.hpp"

namespace bdsym {

using detail::require_same;

SchedulePrefix::SchedulePrefix(int n, std::vector<State> steps) : n_(n), steps_(std::move(steps)) {
  require_dimension(n);
  for (const auto& s : steps_) require_same(n, s.dim(), "schedule step");
}

TimedSchedule::TimedSchedule(SchedulePrefix schedule, std::vector<double> times)
    : schedule_(std::move(schedule)), times_(std::move(times)) {
  if (times_.size() != schedule_.size())
    throw Error(ErrorCode::LengthMismatch, "schedule has " + std::to_string(schedule_.size()) + " steps but " +
                                               std::to_string(times_.size()) + " times");
  for (std::size_t k = 0; k < times_.size(); ++k) {
    if (!std::isfinite(times_[k])) throw Error(ErrorCode::InvalidArgument, "event times must be finite");
    if (k > 0 && !(times_[k - 1] < times_[k]))
      throw Error(ErrorCode::InvalidArgument, "event times must be strictly increasing");
  }
}

OrbitPrefix::OrbitPrefix(std::vector<State> values) : values_(std::move(values)) {
  if (values_.empty()) throw Error(ErrorCode::InvalidArgument, "orbit prefix needs a start value");
  for (const auto& v : values_) require_same(values_.front().dim(), v.dim(), "orbit value");
}

PiecewiseSignal::PiecewiseSignal(State initial, std::vector<std::pair<double, State>> breakpoints)
    : initial_(initial), breakpoints_(std::move(breakpoints)) {
  for (std::size_t k = 0; k < breakpoints_.size(); ++k) {
    require_same(initial_.dim(), breakpoints_[k].second.dim(), "signal value");
    if (k > 0 && !(breakpoints_[k - 1].first < breakpoints_[k].first))
      throw Error(ErrorCode::InvalidArgument, "breakpoints must be strictly increasing");
  }
}

State PiecewiseSignal::at(double t) const {
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t,
                             [](double v, const auto& bp) { return v < bp.first; });
  if (it == breakpoints_.begin()) return initial_;
  return std::prev(it)->second;
}

std::vector<std::uint32_t> stutter_collapse(std::span<const State> values) {
  std::vector<std::uint32_t> out;
  for (const auto& v : values)
    if (out.empty() || out.back() != v.index()) out.push_back(v.index());
  return out;
}

OrbitPrefix discrete_orbit(const TruthTable& phi, const State& mu, const SchedulePrefix& alpha) {
  require_same(phi.dim(), mu.dim(), "discrete_orbit");
  require_same(phi.dim(), alpha.dim(), "discrete_orbit");
  std::vector<State> values{mu};
  values.reserve(alpha.size() + 1);
  for (const auto& mask : alpha.steps()) values.push_back(nu_apply(phi, mask, values.back()));
  return OrbitPrefix(std::move(values));
}

namespace {

PiecewiseSignal assemble(const OrbitPrefix& values, const TimedSchedule& rho) {
  std::vector<std::pair<double, State>> bps;
  bps.reserve(rho.times().size());
  for (std::size_t k = 0; k < rho.times().size(); ++k)
    bps.emplace_back(rho.times()[k], values.at(static_cast<int>(k)));
  return PiecewiseSignal(values.start(), std::move(bps));
}

// preimage lists of Phi^nu, indexed by image
std::vector<std::vector<std::uint32_t>> preimage_index(const TruthTable& phi, std::uint32_t nu) {
  std::vector<std::vector<std::uint32_t>> pre(phi.size());
  for (std::uint32_t y = 0; y < phi.size(); ++y) pre[nu_apply_raw(phi, nu, y)].push_back(y);
  return pre;
}

}  // namespace

PiecewiseSignal continuous_orbit(const TruthTable& phi, const State& mu, const TimedSchedule& rho) {
  return assemble(discrete_orbit(phi, mu, rho.schedule()), rho);
}

std::vector<State> preimages_nu(const TruthTable& phi, const State& nu, const State& x) {
  require_same(phi.dim(), nu.dim(), "preimages_nu");
  require_same(phi.dim(), x.dim(), "preimages_nu");
  std::vector<State> out;
  for (std::uint32_t y = 0; y < phi.size(); ++y)
    if (nu_apply_raw(phi, nu.index(), y) == x.index()) out.emplace_back(phi.dim(), y);
  return out;
}

std::vector<OrbitPrefix> anti_orbit_branches(const TruthTable& phi, const State& mu, const SchedulePrefix& alpha,
                                             std::size_t branch_cap) {
  require_same(phi.dim(), mu.dim(), "anti_orbit_branches");
  require_same(phi.dim(), alpha.dim(), "anti_orbit_branches");
  std::vector<std::vector<State>> branches{{mu}};
  for (const auto& mask : alpha.steps()) {
    const auto pre = preimage_index(phi, mask.index());
    std::vector<std::vector<State>> next;
    for (const auto& b : branches) {
      for (auto y : pre[b.back().index()]) {
        if (next.size() >= branch_cap)
          throw Error(ErrorCode::BranchExplosion,
                      "anti-orbit branch count exceeds cap " + std::to_string(branch_cap));
        auto extended = b;
        extended.emplace_back(phi.dim(), y);
        next.push_back(std::move(extended));
      }
    }
    branches = std::move(next);
    if (branches.empty()) break;
  }
  std::vector<OrbitPrefix> out;
  out.reserve(branches.size());
  for (auto& b : branches) out.emplace_back(std::move(b));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_anti_orbit(const TruthTable& phi, const SchedulePrefix& alpha, const OrbitPrefix& seq) {
  require_same(phi.dim(), alpha.dim(), "is_anti_orbit");
  require_same(phi.dim(), seq.dim(), "is_anti_orbit");
  if (seq.values().size() != alpha.size() + 1)
    throw Error(ErrorCode::LengthMismatch, "sequence length must be schedule length + 1");
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    const auto& y = seq.values()[k + 1];
    if (nu_apply_raw(phi, alpha[k].index(), y.index()) != seq.values()[k].index()) return false;
  }
  return true;
}

PiecewiseSignal continuous_anti_orbit(const TruthTable& phi, const OrbitPrefix& branch, const TimedSchedule& rho) {
  bool ok = false;
  try {
    ok = is_anti_orbit(phi, rho.schedule(), branch);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::LengthMismatch) throw;
  }
  if (!ok) throw Error(ErrorCode::NotAnAntiOrbit, "branch is not an anti-orbit for this schedule");
  return assemble(branch, rho);
}

SchedulePrefix lift_hat(const BijectionTable& g, const SchedulePrefix& alpha) {
  require_same(g.dim(), alpha.dim(), "lift_hat");
  std::vector<State> out;
  out.reserve(alpha.size());
  for (const auto& s : alpha.steps()) out.push_back(g(s));
  return SchedulePrefix(alpha.dim(), std::move(out));
}

TimedSchedule lift_tilde(const BijectionTable& g, const TimedSchedule& rho) {
  require_same(g.dim(), rho.dim(), "lift_tilde");
  std::vector<State> out;
  out.reserve(rho.schedule().size());
  for (const auto& s : rho.schedule().steps()) out.push_back(s.index() == 0 ? s : g(s));
  return TimedSchedule(SchedulePrefix(rho.dim(), std::move(out)), rho.times());
}

SystemPrefixSet system_prefixes(const TruthTable& phi, int horizon, SystemMode mode, std::uint64_t guard) {
  if (horizon < -1) throw Error(ErrorCode::InvalidArgument, "horizon must be >= -1");
  const int n = phi.dim();
  // (2^n)^(K+2) must stay within the guard
  std::uint64_t work = 1;
  for (int i = 0; i < horizon + 2; ++i) {
    if (work > guard >> n)
      throw Error(ErrorCode::TooLarge, "enumeration (2^n)^(K+2) exceeds guard for n=" + std::to_string(n) +
                                           ", K=" + std::to_string(horizon));
    work <<= n;
  }

  SystemPrefixSet result{n, horizon, {}};
  const auto states = static_cast<std::uint32_t>(phi.size());
  const int steps = horizon + 1;

  std::vector<std::vector<std::vector<std::uint32_t>>> pre;
  if (mode == SystemMode::Anti) {
    pre.reserve(states);
    for (std::uint32_t nu = 0; nu < states; ++nu) pre.push_back(preimage_index(phi, nu));
  }

  // collapsed holds the stutter-collapsed path so far; depth counts applied masks
  std::vector<std::uint32_t> collapsed;
  std::function<void(std::uint32_t, int)> walk = [&](std::uint32_t x, int depth) {
    if (depth == steps) {
      result.sequences.insert(collapsed);
      return;
    }
    auto visit = [&](std::uint32_t y) {
      const bool grew = collapsed.back() != y;
      if (grew) collapsed.push_back(y);
      walk(y, depth + 1);
      if (grew) collapsed.pop_back();
    };
    for (std::uint32_t nu = 0; nu < states; ++nu) {
      if (mode == SystemMode::Forward) {
        visit(nu_apply_raw(phi, nu, x));
      } else {
        for (auto y : pre[nu][x]) visit(y);
      }
    }
  };
  for (std::uint32_t mu = 0; mu < states; ++mu) {
    collapsed.assign(1, mu);
    walk(mu, 0);
  }
  return result;
}

std::variant<SchedulePrefix, TimedSchedule> parse_schedule(std::string_view text) {
  using detail::at_line;
  using detail::trim;
  const auto recs = detail::records(text);
  if (recs.empty()) throw Error(ErrorCode::BadSyntax, "empty schedule file", 1);
  auto head = recs.front();
  int n = 0;
  {
    auto h = head.text;
    const auto eq = h.find('=');
    if (eq == std::string_view::npos || trim(h.substr(0, eq)) != "n")
      throw Error(ErrorCode::BadSyntax, at_line(head.line, "expected 'n=<int>'"), head.line);
    auto v = trim(h.substr(eq + 1));
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
    if (ec != std::errc{} || p != v.data() + v.size() || n < 1 || n > kMaxDimension)
      throw Error(ErrorCode::BadSyntax, at_line(head.line, "bad dimension"), head.line);
  }

  std::vector<State> steps;
  std::vector<double> times;
  int timed = -1;
  for (std::size_t i = 1; i < recs.size(); ++i) {
    const auto& r = recs[i];
    auto t = r.text;
    const auto sp = t.find_first_of(" \t");
    const bool has_time = sp != std::string_view::npos;
    if (timed == -1) timed = has_time ? 1 : 0;
    if (timed != static_cast<int>(has_time))
      throw Error(ErrorCode::BadSyntax, at_line(r.line, "mixes timed and untimed steps"), r.line);
    auto bits = has_time ? trim(t.substr(sp)) : t;
    if (has_time) {
      auto ts = t.substr(0, sp);
      double v = 0;
      auto [p, ec] = std::from_chars(ts.data(), ts.data() + ts.size(), v);
      if (ec != std::errc{} || p != ts.data() + ts.size() || !std::isfinite(v))
        throw Error(ErrorCode::BadSyntax, at_line(r.line, "bad time '" + std::string(ts) + "'"), r.line);
      if (!times.empty() && !(times.back() < v))
        throw Error(ErrorCode::BadSyntax, at_line(r.line, "times must be strictly increasing"), r.line);
      times.push_back(v);
    }
    State s;
    try {
      s = State::parse(bits);
    } catch (const Error&) {
      throw Error(ErrorCode::BadSyntax, at_line(r.line, "bad mask '" + std::string(bits) + "'"), r.line);
    }
    if (s.dim() != n)
      throw Error(ErrorCode::DimensionMismatch, at_line(r.line, "mask has wrong dimension"), r.line);
    steps.push_back(s);
  }
  SchedulePrefix prefix(n, std::move(steps));
  if (timed == 1) return TimedSchedule(std::move(prefix), std::move(times));
  return prefix;
}

}  // namespace bdsym
