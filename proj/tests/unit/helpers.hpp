#pragma once

#include <bdsym/core.hpp>
#include <bdsym/morphisms.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace testing {

inline std::string data_path(const std::string& name) { return std::string(BDSYM_DATA_DIR) + "/" + name; }

inline bdsym::TruthTable load_fn(const std::string& name) {
  return bdsym::parse_function(bdsym::read_file(data_path(name)));
}
inline bdsym::BijectionTable load_bij(const std::string& name) {
  return bdsym::parse_bijection(bdsym::read_file(data_path(name)));
}
inline bdsym::MorphismPair load_pair(const std::string& name) {
  return bdsym::parse_pair(bdsym::read_file(data_path(name)));
}

inline bdsym::TruthTable random_table(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, (1u << n) - 1);
  return bdsym::TruthTable::from_function(n, [&](std::uint32_t) { return d(rng); });
}

inline bdsym::Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return bdsym::Permutation(v);
}

inline bdsym::BijectionTable random_bijection(int n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> v(std::size_t{1} << n);
  std::iota(v.begin(), v.end(), 0u);
  std::shuffle(v.begin(), v.end(), rng);
  return bdsym::BijectionTable(n, v);
}

// Every bijection of B^n in lexicographic order of the map.
inline std::vector<std::vector<std::uint32_t>> all_maps(int n) {
  std::vector<std::uint32_t> v(std::size_t{1} << n);
  std::iota(v.begin(), v.end(), 0u);
  std::vector<std::vector<std::uint32_t>> out;
  do out.push_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// Definition-level squares, written against plain bit arithmetic rather than the
// library's evaluation helpers.
inline std::uint32_t mix(const bdsym::TruthTable& f, std::uint32_t nu, std::uint32_t mu) {
  std::uint32_t r = 0;
  for (int i = 0; i < f.dim(); ++i) {
    const std::uint32_t b = 1u << i;
    r |= (nu & b) ? (f[mu] & b) : (mu & b);
  }
  return r;
}

inline bool oracle_iso(const bdsym::TruthTable& phi, const bdsym::TruthTable& psi,
                       const std::vector<std::uint32_t>& g, const std::vector<std::uint32_t>& gp) {
  for (std::uint32_t nu = 0; nu < phi.size(); ++nu)
    for (std::uint32_t mu = 0; mu < phi.size(); ++mu)
      if (g[mix(phi, nu, mu)] != mix(psi, gp[nu], g[mu])) return false;
  return true;
}

inline bool oracle_anti_iso(const bdsym::TruthTable& phi, const bdsym::TruthTable& psi,
                            const std::vector<std::uint32_t>& g, const std::vector<std::uint32_t>& gp) {
  for (std::uint32_t nu = 0; nu < phi.size(); ++nu)
    for (std::uint32_t mu = 0; mu < phi.size(); ++mu)
      if (mix(psi, gp[nu], g[mix(phi, nu, mu)]) != g[mu]) return false;
  return true;
}

using MapPair = std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>;

// Double loop over all (g, g'), n <= 2 in practice.
inline std::vector<MapPair> oracle_pairs(bool anti, const bdsym::TruthTable& phi, const bdsym::TruthTable& psi) {
  const auto maps = all_maps(phi.dim());
  std::vector<MapPair> out;
  for (const auto& g : maps)
    for (const auto& gp : maps)
      if (anti ? oracle_anti_iso(phi, psi, g, gp) : oracle_iso(phi, psi, g, gp)) out.emplace_back(g, gp);
  return out;
}

inline std::vector<MapPair> as_maps(const std::vector<bdsym::MorphismPair>& pairs) {
  std::vector<MapPair> out;
  for (const auto& p : pairs)
    out.emplace_back(std::vector<std::uint32_t>(p.g.map().begin(), p.g.map().end()),
                     std::vector<std::uint32_t>(p.gp.map().begin(), p.gp.map().end()));
  return out;
}

inline bdsym::State st(const char* bits) { return bdsym::State::parse(bits); }

}  // namespace testing
