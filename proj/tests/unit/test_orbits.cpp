#include "helpers.hpp"

#include <bdsym/orbits.hpp>

#include <doctest.h>

#include <set>

using namespace bdsym;
using testing::load_fn;
using testing::st;

namespace {

TruthTable not2() { return TruthTable::from_function(2, [](std::uint32_t x) { return ~x & 3u; }); }

SchedulePrefix sched(int n, std::initializer_list<const char*> steps) {
  std::vector<State> v;
  for (auto s : steps) v.push_back(st(s));
  return SchedulePrefix(n, v);
}

// Every mask sequence of length K+1.
std::vector<SchedulePrefix> all_schedules(int n, int horizon) {
  std::vector<SchedulePrefix> out;
  const std::uint32_t base = 1u << n;
  std::uint64_t total = 1;
  for (int k = 0; k <= horizon; ++k) total *= base;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<State> steps;
    auto c = code;
    for (int k = 0; k <= horizon; ++k, c /= base) steps.emplace_back(n, static_cast<std::uint32_t>(c % base));
    out.emplace_back(n, steps);
  }
  return out;
}

}  // namespace

TEST_CASE("discrete orbit") {
  const auto exa2 = load_fn("exa2.fn");
  SUBCASE("hand-iterated example") {
    const auto o = discrete_orbit(exa2, st("10"), sched(2, {"10", "01"}));
    CHECK(o.values() == std::vector<State>{st("10"), st("00"), st("01")});
    CHECK(o.horizon() == 1);
    CHECK(o.at(-1) == st("10"));
  }
  SUBCASE("zero masks keep the state, full masks iterate synchronously") {
    const auto t3 = load_fn("table3.fn");
    const auto zero = discrete_orbit(t3, st("110"), sched(3, {"000", "000", "000"}));
    for (const auto& v : zero.values()) CHECK(v == st("110"));
    const auto full = discrete_orbit(t3, st("110"), sched(3, {"111", "111", "111"}));
    CHECK(full.values() == std::vector<State>{st("110"), st("100"), st("011"), st("010")});
  }
  SUBCASE("empty schedule") {
    const auto o = discrete_orbit(exa2, st("11"), SchedulePrefix(2));
    CHECK(o.values().size() == 1);
    CHECK(o.horizon() == -1);
  }
  SUBCASE("recurrence on random inputs") {
    std::mt19937_64 rng(19);
    for (int rep = 0; rep < 30; ++rep) {
      const int n = 1 + rep % 4;
      const auto phi = testing::random_table(n, rng);
      std::vector<State> steps;
      for (int k = 0; k < 6; ++k) steps.emplace_back(n, static_cast<std::uint32_t>(rng() % (1u << n)));
      const State mu(n, static_cast<std::uint32_t>(rng() % (1u << n)));
      const auto o = discrete_orbit(phi, mu, SchedulePrefix(n, steps));
      for (int k = 0; k < 6; ++k) CHECK(o.at(k) == nu_apply(phi, steps[static_cast<std::size_t>(k)], o.at(k - 1)));
    }
  }
  CHECK_THROWS_AS(discrete_orbit(exa2, st("100"), SchedulePrefix(2)), Error);
}

TEST_CASE("continuous orbit") {
  const auto exa2 = load_fn("exa2.fn");
  SUBCASE("two events, closed form of the constant (0,1) system") {
    for (std::uint32_t mu = 0; mu < 4; ++mu)
      for (std::uint32_t l = 0; l < 4; ++l)
        for (std::uint32_t v = 0; v < 4; ++v) {
          const TimedSchedule rho(SchedulePrefix(2, {State(2, l), State(2, v)}), {0.0, 1.5});
          const auto sig = continuous_orbit(exa2, State(2, mu), rho);
          const State m(2, mu), lam(2, l), nu(2, v);
          // first coordinate is cleared by any event touching it, the second is set
          auto expect = [](State cur, State ev) {
            const bool b1 = cur.bit(1) && !ev.bit(1);
            const bool b2 = cur.bit(2) || ev.bit(2);
            return State(2, (b1 ? 2u : 0u) | (b2 ? 1u : 0u));
          };
          CHECK(sig.at(-1.0) == m);
          CHECK(sig.at(0.0) == expect(m, lam));
          CHECK(sig.at(1.0) == expect(m, lam));
          CHECK(sig.at(1.5) == expect(expect(m, lam), nu));
          CHECK(sig.at(99.0) == expect(expect(m, lam), nu));
        }
  }
  SUBCASE("sampled signal agrees with the discrete orbit") {
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 20; ++rep) {
      const auto phi = testing::random_table(3, rng);
      std::vector<State> steps;
      std::vector<double> times;
      double t = -2.0;
      for (int k = 0; k < 5; ++k) {
        steps.emplace_back(3, static_cast<std::uint32_t>(rng() % 8));
        t += 0.25 + static_cast<double>(rng() % 100) / 50.0;
        times.push_back(t);
      }
      const State mu(3, static_cast<std::uint32_t>(rng() % 8));
      const TimedSchedule rho(SchedulePrefix(3, steps), times);
      const auto sig = continuous_orbit(phi, mu, rho);
      const auto disc = discrete_orbit(phi, mu, rho.schedule());
      CHECK(sig.at(times[0] - 1.0) == mu);
      for (int k = 0; k < 5; ++k) {
        const auto tk = times[static_cast<std::size_t>(k)];
        const double next = k + 1 < 5 ? times[static_cast<std::size_t>(k + 1)] : tk + 1.0;
        CHECK(sig.at(tk) == disc.at(k));
        CHECK(sig.at((tk + next) / 2) == disc.at(k));
      }
    }
  }
  SUBCASE("timed schedule validation") {
    CHECK_THROWS_AS(TimedSchedule(sched(2, {"10", "01"}), {1.0}), Error);
    CHECK_THROWS_AS(TimedSchedule(sched(2, {"10", "01"}), {1.0, 1.0}), Error);
    try {
      TimedSchedule(sched(2, {"10"}), {0.0, 1.0});
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::LengthMismatch);
    }
  }
}

TEST_CASE("preimages") {
  const auto exa2 = load_fn("exa2.fn");
  for (std::uint32_t x = 0; x < 4; ++x) CHECK(preimages_nu(exa2, State::zeros(2), State(2, x)) == std::vector{State(2, x)});
  CHECK(preimages_nu(not2(), st("11"), st("00")) == std::vector{st("11")});
  CHECK(preimages_nu(exa2, st("01"), st("00")).empty());
}

TEST_CASE("anti-orbit branches") {
  const auto exa2 = load_fn("exa2.fn");
  SUBCASE("examples") {
    const auto single = anti_orbit_branches(exa2, st("10"), SchedulePrefix(2));
    REQUIRE(single.size() == 1);
    CHECK(single[0].values() == std::vector{st("10")});
    const auto one = anti_orbit_branches(not2(), st("00"), sched(2, {"11"}));
    REQUIRE(one.size() == 1);
    CHECK(one[0].values() == std::vector{st("00"), st("11")});
    CHECK(anti_orbit_branches(exa2, st("11"), sched(2, {"11"})).empty());
  }
  SUBCASE("is_anti_orbit") {
    CHECK(is_anti_orbit(exa2, SchedulePrefix(2), OrbitPrefix({st("01")})));
    CHECK(is_anti_orbit(not2(), sched(2, {"11"}), OrbitPrefix({st("00"), st("11")})));
    CHECK_FALSE(is_anti_orbit(not2(), sched(2, {"11"}), OrbitPrefix({st("00"), st("00")})));
    CHECK_THROWS_AS(is_anti_orbit(not2(), sched(2, {"11", "01"}), OrbitPrefix({st("00"), st("11")})), Error);
  }
  SUBCASE("branching: several preimages per step") {
    // Phi^(10) of the constant (0,1) map forgets coordinate 1
    const auto b = anti_orbit_branches(exa2, st("00"), sched(2, {"10", "10"}));
    CHECK(b.size() == 2);
    for (const auto& br : b) CHECK(is_anti_orbit(exa2, sched(2, {"10", "10"}), br));
  }
  SUBCASE("exhaustive cross-check against is_anti_orbit at n=2, K<=2") {
    std::mt19937_64 rng(29);
    for (int rep = 0; rep < 6; ++rep) {
      const auto phi = testing::random_table(2, rng);
      for (int horizon = 0; horizon <= 2; ++horizon)
        for (const auto& alpha : all_schedules(2, horizon))
          for (std::uint32_t mu = 0; mu < 4; ++mu) {
            const auto branches = anti_orbit_branches(phi, State(2, mu), alpha);
            const std::set<OrbitPrefix> found(branches.begin(), branches.end());
            CHECK(found.size() == branches.size());
            // all sequences starting at mu
            std::uint64_t total = 1;
            for (int k = 0; k <= horizon; ++k) total *= 4;
            for (std::uint64_t code = 0; code < total; ++code) {
              std::vector<State> vals{State(2, mu)};
              auto c = code;
              for (int k = 0; k <= horizon; ++k, c /= 4) vals.emplace_back(2, static_cast<std::uint32_t>(c % 4));
              const OrbitPrefix seq(vals);
              CHECK(is_anti_orbit(phi, alpha, seq) == found.contains(seq));
            }
          }
    }
  }
  SUBCASE("bijective Phi with full masks has exactly the inverse iteration") {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 10; ++rep) {
      const auto b = testing::random_bijection(3, rng);
      const auto phi = b.as_table();
      const auto inv = invert(b);
      const auto br = anti_orbit_branches(phi, st("101"), sched(3, {"111", "111", "111"}));
      REQUIRE(br.size() == 1);
      CHECK(br[0].at(0) == inv(st("101")));
      CHECK(br[0].at(2) == inv(inv(inv(st("101")))));
    }
  }
  SUBCASE("branch cap") {
    // the constant map under mask 11 sends all 4 states to 01
    CHECK(anti_orbit_branches(exa2, st("01"), sched(2, {"11", "11", "11"})).size() == 4);
    try {
      anti_orbit_branches(exa2, st("01"), sched(2, {"11"}), 3);
      FAIL("expected BranchExplosion");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BranchExplosion);
    }
  }
}

TEST_CASE("continuous anti-orbit") {
  const OrbitPrefix br({st("00"), st("11")});
  const TimedSchedule rho(sched(2, {"11"}), {0.0});
  const auto sig = continuous_anti_orbit(not2(), br, rho);
  CHECK(sig.at(-0.5) == st("00"));
  CHECK(sig.at(0.0) == st("11"));
  CHECK(sig.at(7.0) == st("11"));
  const auto constant = continuous_anti_orbit(not2(), OrbitPrefix({st("10")}), TimedSchedule(SchedulePrefix(2), {}));
  CHECK(constant.at(-3.0) == st("10"));
  CHECK(constant.at(3.0) == st("10"));
  try {
    continuous_anti_orbit(not2(), OrbitPrefix({st("00"), st("00")}), rho);
    FAIL("expected NotAnAntiOrbit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAnAntiOrbit);
  }
}

TEST_CASE("lifts") {
  const auto swap = testing::load_bij("exa6_gp.bij");
  CHECK(lift_hat(BijectionTable::identity(2), sched(2, {"10", "11"})) == sched(2, {"10", "11"}));
  CHECK(lift_hat(swap, sched(2, {"10", "11"})) == sched(2, {"01", "11"}));

  std::mt19937_64 rng(37);
  for (int rep = 0; rep < 20; ++rep) {
    const auto g = testing::random_bijection(2, rng);
    const auto h = testing::random_bijection(2, rng);
    const auto alpha = sched(2, {"00", "01", "11", "10"});
    CHECK(lift_hat(compose(g, h), alpha) == lift_hat(g, lift_hat(h, alpha)));

    const TimedSchedule rho(alpha, {0.0, 1.0, 2.5, 3.0});
    const auto lifted = lift_tilde(g, rho);
    CHECK(lifted.times() == rho.times());
    CHECK(lifted.schedule()[0] == st("00"));
    for (std::size_t k = 1; k < 4; ++k) CHECK(lifted.schedule()[k] == g(alpha[k]));
  }
  const TimedSchedule zeros(sched(2, {"00", "00"}), {0.0, 1.0});
  CHECK(lift_tilde(testing::random_bijection(2, rng), zeros) == zeros);
}

TEST_CASE("stutter collapse") {
  const std::vector<State> v{st("00"), st("00"), st("01"), st("01"), st("00")};
  CHECK(stutter_collapse(v) == std::vector<std::uint32_t>{0, 1, 0});
  CHECK(stutter_collapse(std::vector<State>{}).empty());
}

TEST_CASE("system prefixes") {
  const auto exa2 = load_fn("exa2.fn");
  const auto exa16 = load_fn("exa16.fn");
  SUBCASE("K = -1 gives singletons") {
    const auto s = system_prefixes(exa2, -1, SystemMode::Forward);
    CHECK(s.sequences.size() == 4);
    for (const auto& q : s.sequences) CHECK(q.size() == 1);
    CHECK(system_prefixes(exa2, -1, SystemMode::Anti).sequences == s.sequences);
  }
  SUBCASE("forward system of the constant (1,0) map equals the anti system of the constant (0,1) map") {
    for (int k = 2; k <= 3; ++k) {
      const auto fwd = system_prefixes(exa16, k, SystemMode::Forward);
      const auto anti = system_prefixes(exa2, k, SystemMode::Anti);
      CHECK(fwd.sequences == anti.sequences);
      CHECK(fwd.sequences.size() == 11);
    }
  }
  SUBCASE("the two forward systems differ") {
    CHECK(system_prefixes(exa2, 2, SystemMode::Forward).sequences !=
          system_prefixes(exa16, 2, SystemMode::Forward).sequences);
  }
  SUBCASE("guard") {
    try {
      system_prefixes(TruthTable::identity(4), 5, SystemMode::Forward);
      FAIL("expected TooLarge");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::TooLarge);
    }
  }
}

TEST_CASE("schedule files") {
  const auto untimed = parse_schedule("n=2\n10\n01\n");
  REQUIRE(std::holds_alternative<SchedulePrefix>(untimed));
  CHECK(std::get<SchedulePrefix>(untimed) == sched(2, {"10", "01"}));
  const auto timed = parse_schedule("n=2\n0 10\n1.5 01\n");
  REQUIRE(std::holds_alternative<TimedSchedule>(timed));
  CHECK(std::get<TimedSchedule>(timed).times() == std::vector<double>{0.0, 1.5});
  CHECK_THROWS_AS(parse_schedule("n=2\n0 10\n01\n"), Error);
  CHECK_THROWS_AS(parse_schedule("n=2\n100\n"), Error);
  CHECK_THROWS_AS(parse_schedule("n=2\n1 10\n0 01\n"), Error);
  CHECK(std::holds_alternative<SchedulePrefix>(parse_schedule("n=3\n")));
}
