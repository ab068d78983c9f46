#include <bdsym/groups.hpp>

#include <algorithm>
#include <deque>

#include "checks.hpp"

namespace bdsym {

using detail::require_same;

PairSet::PairSet(int n, std::vector<MorphismPair> pairs) : n_(n) {
  for (auto& p : pairs) insert(std::move(p));
}

bool PairSet::contains(const MorphismPair& p) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

bool PairSet::insert(MorphismPair p) {
  require_same(n_, p.dim(), "pair set");
  if (p.kind != PairKind::Iso) throw Error(ErrorCode::KindMismatch, "pair sets hold iso pairs only");
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p);
  if (it != pairs_.end() && *it == p) return false;
  pairs_.insert(it, std::move(p));
  return true;
}

MorphismPair identity_pair(int n) { return {BijectionTable::identity(n), BijectionTable::identity(n)}; }

MorphismPair compose_pairs(const MorphismPair& p, const MorphismPair& q) {
  require_same(p.dim(), q.dim(), "compose_pairs");
  if (p.kind != PairKind::Iso || q.kind != PairKind::Iso)
    throw Error(ErrorCode::KindMismatch, "only iso pairs compose into automorphisms");
  return {compose(p.g, q.g), compose(p.gp, q.gp)};
}

PairSet generate_group(const PairSet& generators, const TruthTable& phi) {
  require_same(generators.dim(), phi.dim(), "generate_group");
  std::size_t i = 0;
  for (const auto& gen : generators) {
    if (!check_iso(phi, phi, gen.g, gen.gp))
      throw Error(ErrorCode::NotAnAutomorphism, "generator #" + std::to_string(i + 1) + " is not an automorphism");
    ++i;
  }
  PairSet group(phi.dim());
  std::deque<MorphismPair> work;
  auto add = [&](MorphismPair p) {
    if (group.insert(p)) work.push_back(std::move(p));
  };
  add(identity_pair(phi.dim()));
  for (const auto& gen : generators) add(gen);
  // Every new element is multiplied by every generator on both sides; in a
  // finite group this reaches all products, and inverses are powers.
  while (!work.empty()) {
    auto p = std::move(work.front());
    work.pop_front();
    for (const auto& gen : generators) {
      add(compose_pairs(gen, p));
      add(compose_pairs(p, gen));
    }
    add(invert_pair(p));
  }
  return group;
}

std::string_view to_string(GroupDefect d) {
  switch (d) {
    case GroupDefect::None: return "ok";
    case GroupDefect::MissingIdentity: return "missing-identity";
    case GroupDefect::NotClosedUnderComposition: return "not-closed-under-composition";
    case GroupDefect::NotClosedUnderInverse: return "not-closed-under-inverse";
    case GroupDefect::NotAnAutomorphism: return "not-an-automorphism";
    case GroupDefect::DimensionMismatch: return "dimension-mismatch";
  }
  return "unknown";
}

GroupCheck is_group(const PairSet& s, const TruthTable& phi) {
  if (s.dim() != phi.dim()) return {GroupDefect::DimensionMismatch, "set and function dimensions differ"};
  if (!s.contains(identity_pair(s.dim()))) return {GroupDefect::MissingIdentity, "(id, id) is absent"};
  std::size_t i = 0;
  for (const auto& p : s) {
    ++i;
    if (!check_iso(phi, phi, p.g, p.gp))
      return {GroupDefect::NotAnAutomorphism, "element #" + std::to_string(i) + " fails the iso check"};
    if (!s.contains(invert_pair(p)))
      return {GroupDefect::NotClosedUnderInverse, "inverse of element #" + std::to_string(i) + " is absent"};
  }
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b)
      if (!s.contains(compose_pairs(s.pairs()[a], s.pairs()[b])))
        return {GroupDefect::NotClosedUnderComposition,
                "product of elements #" + std::to_string(a + 1) + " and #" + std::to_string(b + 1) + " is absent"};
  return {};
}

namespace {

// (pi_sigma, pi_sigma) commutes with every Phi^nu iff pi_sigma commutes with Phi,
// since pi_sigma distributes over the bitwise mix (mu & ~nu) | (Phi(mu) & nu).
bool commutes(const TruthTable& phi, const BijectionTable& p) {
  for (std::uint32_t x = 0; x < phi.size(); ++x)
    if (p[phi[x]] != phi[p[x]]) return false;
  return true;
}

}  // namespace

SymmetryReport classify(const TruthTable& phi, const ClassifyOptions& opts) {
  const int n = phi.dim();
  SymmetryReport rep;
  rep.n = n;
  rep.self_dual = dual(phi) == phi;

  // coordinate symmetry: sigma != id in descending lexicographic order
  {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
    for (bool more = n > 1; more; more = std::prev_permutation(v.begin(), v.end())) {
      Permutation s(v);
      if (s.is_identity()) break;
      auto p = permutation_bijection(s);
      if (commutes(phi, p)) {
        MorphismPair pair(p, p);
        if (!check_iso(phi, phi, pair.g, pair.gp))
          throw Error(ErrorCode::InvalidArgument, "internal: coordinate witness failed the iso check");
        rep.coordinate_symmetric = true;
        rep.coordinate_witness = s;
        rep.coordinate_witness_pair = std::move(pair);
        break;
      }
    }
  }

  // translation symmetry: (theta^lambda, g') != (id, id), lambda in index order
  for (std::uint32_t lambda = 0; lambda < phi.size() && !rep.translation_symmetric; ++lambda) {
    const State l(n, lambda);
    const auto theta = translation_bijection(l);
    // with lambda = 0 the first completion may be (id, id) itself
    for (auto& gp : completions(PairKind::Iso, phi, phi, theta, lambda == 0 ? 2 : 1)) {
      if (lambda == 0 && gp.is_identity()) continue;
      rep.translation_symmetric = true;
      rep.translation_vector = l;
      rep.translation_witness = MorphismPair(theta, std::move(gp));
      break;
    }
  }

  if (n <= opts.max_n) {
    SearchOptions so;
    so.max_n = opts.max_n;
    if (opts.list_aut) {
      auto all = find_isos(phi, phi, so);
      rep.aut_order = all.count;
      rep.aut = std::move(all.pairs);
    } else {
      so.count_only = true;
      rep.aut_order = find_isos(phi, phi, so).count;
    }
    rep.symmetrical = *rep.aut_order > 1;
    if (*rep.symmetrical) {
      SearchOptions first;
      first.max_n = opts.max_n;
      first.limit = 2;
      for (auto& p : find_isos(phi, phi, first).pairs)
        if (!(p.g.is_identity() && p.gp.is_identity())) {
          rep.symmetrical_witness = std::move(p);
          break;
        }
    }
    SearchOptions one;
    one.max_n = opts.max_n;
    one.limit = 1;
    auto anti = find_anti_isos(phi, phi, one);
    rep.anti_symmetrical = anti.count > 0;
    if (anti.count > 0) rep.anti_symmetrical_witness = std::move(anti.pairs.front());
  } else if (rep.coordinate_symmetric || rep.translation_symmetric) {
    // a non-identity automorphism is known even without the full search
    rep.symmetrical = true;
    rep.symmetrical_witness = rep.coordinate_symmetric ? rep.coordinate_witness_pair : rep.translation_witness;
  }
  return rep;
}

}  // namespace bdsym
