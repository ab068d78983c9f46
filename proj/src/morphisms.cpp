#include <bdsym/morphisms.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "checks.hpp"
#include "text_records.hpp"

namespace bdsym {

using detail::require_same;

std::string_view to_string(PairKind kind) { return kind == PairKind::Iso ? "iso" : "anti-iso"; }

MorphismPair::MorphismPair(BijectionTable g_, BijectionTable gp_, PairKind kind_)
    : g(std::move(g_)), gp(std::move(gp_)), kind(kind_) {
  require_same(g.dim(), gp.dim(), "morphism pair");
}

namespace {

void require_pair_dims(const TruthTable& phi, const TruthTable& psi, const BijectionTable& g,
                       const BijectionTable& gp) {
  require_same(phi.dim(), psi.dim(), "pair check");
  require_same(phi.dim(), g.dim(), "pair check");
  require_same(phi.dim(), gp.dim(), "pair check");
}

std::string bits(int n, std::uint32_t x) { return bits_to_string(n, x); }

// First (nu, mu) violating the iso/anti-iso square, if any.
std::optional<std::string> square_violation(PairKind kind, const TruthTable& phi, const TruthTable& psi,
                                            const BijectionTable& g, const BijectionTable& gp) {
  require_pair_dims(phi, psi, g, gp);
  const int n = phi.dim();
  const auto size = static_cast<std::uint32_t>(phi.size());
  for (std::uint32_t nu = 0; nu < size; ++nu) {
    const auto nup = gp[nu];
    for (std::uint32_t mu = 0; mu < size; ++mu) {
      if (kind == PairKind::Iso) {
        const auto lhs = g[nu_apply_raw(phi, nu, mu)];
        const auto rhs = nu_apply_raw(psi, nup, g[mu]);
        if (lhs != rhs)
          return "nu=" + bits(n, nu) + " mu=" + bits(n, mu) + ": g(Phi^nu(mu))=" + bits(n, lhs) +
                 " but Psi^g'(nu)(g(mu))=" + bits(n, rhs);
      } else {
        const auto lhs = nu_apply_raw(psi, nup, g[nu_apply_raw(phi, nu, mu)]);
        if (lhs != g[mu])
          return "nu=" + bits(n, nu) + " mu=" + bits(n, mu) + ": Psi^g'(nu)(g(Phi^nu(mu)))=" + bits(n, lhs) +
                 " but g(mu)=" + bits(n, g[mu]);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool check_iso(const TruthTable& phi, const TruthTable& psi, const BijectionTable& g, const BijectionTable& gp) {
  return !square_violation(PairKind::Iso, phi, psi, g, gp);
}

bool check_anti_iso(const TruthTable& phi, const TruthTable& psi, const BijectionTable& g,
                    const BijectionTable& gp) {
  return !square_violation(PairKind::AntiIso, phi, psi, g, gp);
}

bool check_pair(const TruthTable& phi, const TruthTable& psi, const MorphismPair& p) {
  return p.kind == PairKind::Iso ? check_iso(phi, psi, p.g, p.gp) : check_anti_iso(phi, psi, p.g, p.gp);
}

namespace {

using Table = std::vector<std::uint32_t>;

/// Groups the masks nu' of Psi by the table of Psi^{nu'}.
class MaskIndex {
 public:
  explicit MaskIndex(const TruthTable& psi) {
    for (std::uint32_t nu = 0; nu < psi.size(); ++nu) {
      Table t(psi.size());
      for (std::uint32_t x = 0; x < psi.size(); ++x) t[x] = nu_apply_raw(psi, nu, x);
      by_table_[std::move(t)].push_back(nu);
    }
  }

  const std::vector<std::uint32_t>* find(const Table& t) const {
    auto it = by_table_.find(t);
    return it == by_table_.end() ? nullptr : &it->second;
  }

 private:
  std::map<Table, std::vector<std::uint32_t>> by_table_;
};

/// Candidate sets S(nu) for a fixed g; empty optional when some S(nu) is empty.
std::optional<std::vector<const std::vector<std::uint32_t>*>> candidates(PairKind kind, const TruthTable& phi,
                                                                         const MaskIndex& index,
                                                                         std::span<const std::uint32_t> g) {
  const auto size = static_cast<std::uint32_t>(phi.size());
  Table ginv(size);
  for (std::uint32_t x = 0; x < size; ++x) ginv[g[x]] = x;

  std::vector<const std::vector<std::uint32_t>*> s(size);
  Table conj(size), target(size);
  std::vector<bool> hit(size);
  for (std::uint32_t nu = 0; nu < size; ++nu) {
    // conj = g o Phi^nu o g^-1
    for (std::uint32_t y = 0; y < size; ++y) conj[y] = g[nu_apply_raw(phi, nu, ginv[y])];
    if (kind == PairKind::Iso) {
      target = conj;
    } else {
      // Psi^{nu'} o conj = id forces conj bijective and Psi^{nu'} = conj^-1
      std::fill(hit.begin(), hit.end(), false);
      for (std::uint32_t y = 0; y < size; ++y) {
        if (hit[conj[y]]) return std::nullopt;
        hit[conj[y]] = true;
        target[conj[y]] = y;
      }
    }
    s[nu] = index.find(target);
    if (!s[nu]) return std::nullopt;
  }
  return s;
}

/// Enumerates bijective selections nu -> nu' in S(nu), lexicographically.
/// emit returns false to stop; the return value is false if stopped early.
template <typename Emit>
bool enumerate_matchings(const std::vector<const std::vector<std::uint32_t>*>& s, Emit&& emit) {
  const std::size_t size = s.size();
  Table choice(size);
  std::vector<bool> used(size, false);
  std::vector<std::size_t> cursor(size, 0);
  std::size_t depth = 0;
  while (true) {
    if (depth == size) {
      if (!emit(std::as_const(choice))) return false;
      if (depth == 0) return true;
      --depth;
      used[choice[depth]] = false;
      ++cursor[depth];
      continue;
    }
    const auto& opts = *s[depth];
    auto& c = cursor[depth];
    while (c < opts.size() && used[opts[c]]) ++c;
    if (c < opts.size()) {
      choice[depth] = opts[c];
      used[opts[c]] = true;
      ++depth;
      if (depth < size) cursor[depth] = 0;
    } else {
      c = 0;
      if (depth == 0) return true;
      --depth;
      used[choice[depth]] = false;
      ++cursor[depth];
    }
  }
}

/// Number of perfect matchings. Each S(nu) is a whole class of masks with equal
/// Psi^{nu'} tables, so the count is a product of factorials when every class
/// is hit exactly as often as its size, and zero otherwise.
std::uint64_t count_matchings(const std::vector<const std::vector<std::uint32_t>*>& s) {
  std::map<const std::vector<std::uint32_t>*, std::size_t> hits;
  for (const auto* c : s) ++hits[c];
  std::uint64_t count = 1;
  for (const auto& [cls, h] : hits) {
    if (h != cls->size()) return 0;
    for (std::size_t k = 2; k <= h; ++k) count *= k;
  }
  return count;
}

}  // namespace

SearchResult find_pairs(PairKind kind, const TruthTable& phi, const TruthTable& psi, const SearchOptions& opts) {
  require_same(phi.dim(), psi.dim(), "find_pairs");
  const int n = phi.dim();
  if (n > opts.max_n)
    throw Error(ErrorCode::TooLarge, "exhaustive search is capped at n=" + std::to_string(opts.max_n) +
                                         " (got n=" + std::to_string(n) + ")");
  const MaskIndex index(psi);
  SearchResult result;
  Table perm(phi.size());
  std::iota(perm.begin(), perm.end(), 0u);

  const bool limited = opts.limit.has_value();
  const bool fast_count = opts.count_only && !limited;
  do {
    const auto s = candidates(kind, phi, index, perm);
    if (!s) continue;
    if (fast_count) {
      result.count += count_matchings(*s);
      continue;
    }
    const bool finished = enumerate_matchings(*s, [&](const Table& gp) {
      if (limited && result.count == *opts.limit) {
        result.truncated = true;
        return false;
      }
      ++result.count;
      if (!opts.count_only) result.pairs.emplace_back(BijectionTable(n, perm), BijectionTable(n, gp), kind);
      return true;
    });
    if (!finished) break;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

SearchResult find_isos(const TruthTable& phi, const TruthTable& psi, const SearchOptions& opts) {
  return find_pairs(PairKind::Iso, phi, psi, opts);
}

SearchResult find_anti_isos(const TruthTable& phi, const TruthTable& psi, const SearchOptions& opts) {
  return find_pairs(PairKind::AntiIso, phi, psi, opts);
}

std::vector<BijectionTable> completions(PairKind kind, const TruthTable& phi, const TruthTable& psi,
                                        const BijectionTable& g, std::optional<std::size_t> limit) {
  require_same(phi.dim(), psi.dim(), "completions");
  require_same(phi.dim(), g.dim(), "completions");
  std::vector<BijectionTable> out;
  if (limit && *limit == 0) return out;
  const MaskIndex index(psi);
  const auto s = candidates(kind, phi, index, g.map());
  if (!s) return out;
  enumerate_matchings(*s, [&](const Table& gp) {
    out.emplace_back(phi.dim(), gp);
    return !limit || out.size() < *limit;
  });
  return out;
}

MorphismPair invert_pair(const MorphismPair& p) { return MorphismPair(invert(p.g), invert(p.gp), p.kind); }

MorphismPair parse_pair(std::string_view text, PairKind kind) {
  // blank out the lines outside each block so reported line numbers stay global
  std::string g_block, gp_block;
  std::string* current = nullptr;
  bool seen_g = false, seen_gp = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    ++line_no;
    auto line = text.substr(pos, nl - pos);
    auto body = line.substr(0, line.find('#'));
    body = detail::trim(body);
    if (body == "g:" || body == "g':") {
      auto& seen = body == "g:" ? seen_g : seen_gp;
      if (seen) throw Error(ErrorCode::BadSyntax, detail::at_line(line_no, "repeated block marker"), line_no);
      seen = true;
      current = body == "g:" ? &g_block : &gp_block;
      line = {};
    } else if (!body.empty() && !current) {
      throw Error(ErrorCode::BadSyntax, detail::at_line(line_no, "content before 'g:' marker"), line_no);
    }
    for (auto* b : {&g_block, &gp_block}) {
      if (b == current) *b += line;
      *b += '\n';
    }
    pos = nl + 1;
  }
  if (!seen_g || !seen_gp) throw Error(ErrorCode::BadSyntax, "pair file needs both 'g:' and 'g':' blocks");
  return MorphismPair(parse_bijection(g_block), parse_bijection(gp_block), kind);
}

std::string serialize(const MorphismPair& p) { return "g:\n" + serialize(p.g) + "g':\n" + serialize(p.gp); }

// ---------------------------------------------------------------- verification

namespace {

struct Sample {
  State mu;
  SchedulePrefix alpha;
  std::vector<double> times;
};

std::string describe(const Sample& s, int k) {
  std::string a;
  for (const auto& m : s.alpha.steps()) a += (a.empty() ? "" : ",") + m.to_string();
  return "mu=" + s.mu.to_string() + " alpha=[" + a + "] k=" + std::to_string(k);
}

/// Calls visit for every sampled (mu, alpha prefix, event times).
template <typename Visit>
void for_each_sample(int n, const VerifyOptions& opts, VerificationReport& rep, Visit&& visit) {
  const int steps = opts.horizon + 1;
  const std::uint64_t states = std::uint64_t{1} << n;
  // total = (2^n)^(K+2), saturating
  std::uint64_t total = 1;
  bool overflow = false;
  for (int i = 0; i < steps + 1 && !overflow; ++i) {
    if (total > (std::uint64_t{1} << 40) / states) overflow = true;
    total *= states;
  }
  rep.exhaustive = !overflow && ((n <= 2 && opts.horizon <= 3) || total <= opts.budget);

  if (rep.exhaustive) {
    std::vector<std::uint32_t> digits(static_cast<std::size_t>(steps + 1), 0);
    std::vector<double> times(static_cast<std::size_t>(steps));
    std::iota(times.begin(), times.end(), 0.0);
    for (std::uint64_t i = 0; i < total; ++i) {
      std::uint64_t v = i;
      std::vector<State> alpha;
      for (int k = 0; k < steps; ++k) {
        alpha.emplace_back(n, static_cast<std::uint32_t>(v % states));
        v /= states;
      }
      Sample s{State(n, static_cast<std::uint32_t>(v)), SchedulePrefix(n, std::move(alpha)), times};
      ++rep.samples;
      visit(s);
    }
    return;
  }

  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(states - 1));
  std::uniform_real_distribution<double> gap(0.25, 2.0);
  for (std::uint64_t i = 0; i < opts.budget; ++i) {
    State mu(n, pick(rng));
    std::vector<State> alpha;
    std::vector<double> times;
    double t = gap(rng) - 1.0;
    for (int k = 0; k < steps; ++k) {
      alpha.emplace_back(n, pick(rng));
      times.push_back(t);
      t += gap(rng);
    }
    Sample s{mu, SchedulePrefix(n, std::move(alpha)), std::move(times)};
    ++rep.samples;
    visit(s);
  }
}

/// Instants probing every piece of a signal with the given breakpoints.
std::vector<double> probe_times(const std::vector<double>& times) {
  if (times.empty()) return {0.0};
  std::vector<double> out{times.front() - 1.0};
  for (std::size_t k = 0; k < times.size(); ++k) {
    out.push_back(times[k]);
    out.push_back(k + 1 < times.size() ? (times[k] + times[k + 1]) / 2 : times[k] + 1.0);
  }
  return out;
}

void fail(StatementResult& r, std::string what) {
  if (r.pass) r.counterexample = std::move(what);
  r.pass = false;
}

VerificationReport start_report(int theorem, const TruthTable& phi, const TruthTable& psi,
                                const BijectionTable& g, const BijectionTable& gp, const VerifyOptions& opts) {
  require_pair_dims(phi, psi, g, gp);
  if (opts.horizon < -1) throw Error(ErrorCode::InvalidArgument, "horizon must be >= -1");
  VerificationReport rep;
  rep.theorem = theorem;
  rep.horizon = opts.horizon;
  rep.budget = opts.budget;
  rep.seed = opts.seed;
  rep.a.label = "a";
  rep.b.label = "b";
  rep.c.label = "c";
  const auto kind = theorem == 29 ? PairKind::Iso : PairKind::AntiIso;
  if (auto v = square_violation(kind, phi, psi, g, gp)) fail(rep.a, *v);
  rep.a.checked = std::uint64_t{phi.size()} * phi.size();

  // fixed-point half of c): g(mu) = Psi^{g'(0)}(g(mu))
  const auto zero_image = gp[0];
  for (std::uint32_t mu = 0; mu < phi.size(); ++mu) {
    ++rep.c.checked;
    const auto gm = g[mu];
    if (nu_apply_raw(psi, zero_image, gm) != gm)
      fail(rep.c, "mu=" + bits(phi.dim(), mu) + ": Psi^g'(0)(g(mu))=" +
                      bits(phi.dim(), nu_apply_raw(psi, zero_image, gm)) + " but g(mu)=" + bits(phi.dim(), gm));
  }
  return rep;
}

std::vector<State> image(const BijectionTable& g, const OrbitPrefix& orbit) {
  std::vector<State> out;
  out.reserve(orbit.values().size());
  for (const auto& v : orbit.values()) out.push_back(g(v));
  return out;
}

}  // namespace

VerificationReport verify_theorem29(const TruthTable& phi, const TruthTable& psi, const BijectionTable& g,
                                    const BijectionTable& gp, const VerifyOptions& opts) {
  auto rep = start_report(29, phi, psi, g, gp, opts);
  rep.reading =
      "b) g(Phi-hat^alpha(mu,k)) = Psi-hat^{g'-hat(alpha)}(g(mu),k) for k=-1..K; "
      "c) g(mu) = Psi^{g'(0)}(g(mu)) for all mu, and g(Phi^rho(mu,t)) = Psi^{g'-tilde(rho)}(g(mu),t) "
      "before t_0, at every breakpoint and inside every interval";
  for_each_sample(phi.dim(), opts, rep, [&](const Sample& s) {
    const auto gmu = g(s.mu);
    const auto lhs = discrete_orbit(phi, s.mu, s.alpha);
    const auto rhs = discrete_orbit(psi, gmu, lift_hat(gp, s.alpha));
    for (int k = -1; k <= lhs.horizon(); ++k) {
      ++rep.b.checked;
      if (g(lhs.at(k)) != rhs.at(k))
        fail(rep.b, describe(s, k) + ": g(Phi-hat)=" + g(lhs.at(k)).to_string() +
                        " but Psi-hat=" + rhs.at(k).to_string());
    }

    const TimedSchedule rho(s.alpha, s.times);
    const auto sig = continuous_orbit(phi, s.mu, rho);
    const auto sig_psi = continuous_orbit(psi, gmu, lift_tilde(gp, rho));
    for (double t : probe_times(s.times)) {
      ++rep.c.checked;
      if (g(sig.at(t)) != sig_psi.at(t))
        fail(rep.c, describe(s, -1) + " t=" + std::to_string(t) + ": g(Phi^rho)=" + g(sig.at(t)).to_string() +
                        " but Psi^rho'=" + sig_psi.at(t).to_string());
    }
  });
  return rep;
}

VerificationReport verify_theorem28(const TruthTable& phi, const TruthTable& psi, const BijectionTable& g,
                                    const BijectionTable& gp, const VerifyOptions& opts) {
  auto rep = start_report(28, phi, psi, g, gp, opts);
  rep.reading =
      "relational: for k=-1..K the g-image (g(mu), g(x_0), ..., g(x_k)) of the forward orbit must be an "
      "anti-orbit branch of Psi for the prefix alpha'^0..alpha'^k of g'-hat(alpha) started at g(mu), i.e. "
      "Psi^{g'(alpha^j)} maps g(x_j) back onto g(x_{j-1}); c) the same membership for g'-tilde(rho) and the "
      "assembled anti-orbit signal equals g(Phi^rho(mu,t)) at every probe instant";
  for_each_sample(phi.dim(), opts, rep, [&](const Sample& s) {
    const auto forward = discrete_orbit(phi, s.mu, s.alpha);
    const auto mapped = image(g, forward);
    const auto lifted = lift_hat(gp, s.alpha);
    for (int k = -1; k <= forward.horizon(); ++k) {
      ++rep.b.checked;
      const auto len = static_cast<std::size_t>(k + 1);
      const SchedulePrefix prefix(s.alpha.dim(),
                                  std::vector<State>(lifted.steps().begin(), lifted.steps().begin() + len));
      const OrbitPrefix branch(std::vector<State>(mapped.begin(), mapped.begin() + len + 1));
      if (!is_anti_orbit(psi, prefix, branch)) {
        fail(rep.b, describe(s, k) + ": g-image of the forward orbit is not an anti-orbit branch of Psi");
        break;
      }
    }

    const TimedSchedule rho(s.alpha, s.times);
    const auto rho_psi = lift_tilde(gp, rho);
    const OrbitPrefix branch(mapped);
    ++rep.c.checked;
    if (!is_anti_orbit(psi, rho_psi.schedule(), branch)) {
      fail(rep.c, describe(s, -1) + ": timed g-image is not an anti-orbit of Psi under g'-tilde(rho)");
      return;
    }
    const auto anti = continuous_anti_orbit(psi, branch, rho_psi);
    const auto sig = continuous_orbit(phi, s.mu, rho);
    for (double t : probe_times(s.times)) {
      ++rep.c.checked;
      if (g(sig.at(t)) != anti.at(t))
        fail(rep.c, describe(s, -1) + " t=" + std::to_string(t) + ": g(Phi^rho)=" + g(sig.at(t)).to_string() +
                        " but anti-orbit=" + anti.at(t).to_string());
    }
  });
  return rep;
}

}  // namespace bdsym
