#include "helpers.hpp"

#include <bdsym/groups.hpp>
#include <bdsym/portrait.hpp>

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace bdsym;
using testing::load_bij;
using testing::load_fn;
using testing::load_pair;
using testing::st;

namespace {

TruthTable not2() { return TruthTable::from_function(2, [](std::uint32_t x) { return ~x & 3u; }); }

MorphismPair coord_pair(std::vector<int> sigma) {
  const auto p = permutation_bijection(Permutation(std::move(sigma)));
  return MorphismPair(p, p);
}

MorphismPair trans_pair(const char* lambda) {
  const auto l = st(lambda);
  return MorphismPair(translation_bijection(l), BijectionTable::identity(l.dim()));
}

}  // namespace

TEST_CASE("composing pairs") {
  const auto s = coord_pair({3, 1, 2});
  const auto id = identity_pair(3);
  CHECK(compose_pairs(s, id) == s);
  CHECK(compose_pairs(id, s) == s);
  const auto sigma = Permutation({3, 1, 2});
  const auto ss = permutation_bijection(compose(sigma, sigma));
  CHECK(compose_pairs(s, s) == MorphismPair(ss, ss));
  const MorphismPair g5(load_bij("table5_g.bij"), BijectionTable::identity(2));
  CHECK(compose_pairs(g5, g5).g == translation_bijection(st("11")));
  CHECK_THROWS_AS(compose_pairs(identity_pair(2), identity_pair(3)), Error);
  try {
    compose_pairs(MorphismPair(identity_pair(2).g, identity_pair(2).gp, PairKind::AntiIso), identity_pair(2));
    FAIL("expected KindMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::KindMismatch);
  }
}

TEST_CASE("generating groups") {
  SUBCASE("one involution") {
    const auto phi = load_fn("exe2_like.fn");
    const auto g = load_pair("table2_g.pair");
    const auto grp = generate_group(PairSet(3, {g}), phi);
    CHECK(grp.size() == 2);
    CHECK(grp.contains(identity_pair(3)));
    CHECK(grp.contains(g));
  }
  SUBCASE("cyclic coordinate group of order 3") {
    const auto phi = load_fn("exa17.fn");
    const auto s = coord_pair({3, 1, 2});
    CHECK(check_iso(phi, phi, s.g, s.gp));
    const auto grp = generate_group(PairSet(3, {s}), phi);
    CHECK(grp.size() == 3);
    CHECK(grp.contains(compose_pairs(s, s)));
    CHECK(is_group(grp, phi).ok());
  }
  SUBCASE("three involutions on three points generate order 6") {
    const auto phi = load_fn("exe2_like.fn");
    PairSet gens(3, {load_pair("table2_g.pair"), load_pair("table2_u.pair"), load_pair("table2_v.pair")});
    const auto grp = generate_group(gens, phi);
    CHECK(grp.size() == 6);
    CHECK(is_group(grp, phi).ok());
    CHECK(generate_group(grp, phi) == grp);
    for (const auto& p : grp) CHECK(p.gp.is_identity());
  }
  SUBCASE("a non-automorphism generator is rejected") {
    try {
      generate_group(PairSet(2, {trans_pair("01")}), load_fn("exa2.fn"));
      FAIL("expected NotAnAutomorphism");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotAnAutomorphism);
    }
  }
}

TEST_CASE("is_group") {
  SUBCASE("translations on the four maps of the self-dual family") {
    for (const char* f : {"exa15_id.fn", "exa15_n1.fn", "exa15_n2.fn", "exa15_n12.fn"}) {
      const auto phi = load_fn(f);
      PairSet s(2, {identity_pair(2), trans_pair("01"), trans_pair("10"), trans_pair("11")});
      CHECK(is_group(s, phi).ok());
      CHECK(classify(phi).self_dual);
    }
  }
  SUBCASE("defects") {
    const auto phi = not2();
    CHECK(is_group(PairSet(2, {trans_pair("01"), trans_pair("10"), trans_pair("11")}), phi).defect ==
          GroupDefect::MissingIdentity);
    CHECK(is_group(PairSet(2, {identity_pair(2), trans_pair("01"), trans_pair("10")}), phi).defect ==
          GroupDefect::NotClosedUnderComposition);
    const MorphismPair c3(permutation_bijection(Permutation({1, 2})), BijectionTable(2, {1, 2, 0, 3}));
    // g' is a 3-cycle; closing under composition alone would need its square too
    CHECK_FALSE(is_group(PairSet(2, {identity_pair(2), c3}), phi).ok());
    CHECK(is_group(PairSet(2, {identity_pair(2), trans_pair("01")}), load_fn("exa2.fn")).defect ==
          GroupDefect::NotAnAutomorphism);
  }
  SUBCASE("the full automorphism set is a group") {
    std::mt19937_64 rng(59);
    for (int rep = 0; rep < 20; ++rep) {
      const auto phi = testing::random_table(2, rng);
      const PairSet aut(2, find_isos(phi, phi).pairs);
      CHECK(is_group(aut, phi).ok());
      CHECK(generate_group(aut, phi) == aut);
    }
  }
}

TEST_CASE("classification") {
  SUBCASE("NOT") {
    const auto r = classify(not2());
    CHECK(r.anti_symmetrical == true);
    REQUIRE(r.anti_symmetrical_witness);
    CHECK(*r.anti_symmetrical_witness == MorphismPair(BijectionTable::identity(2), BijectionTable::identity(2),
                                                       PairKind::AntiIso));
    CHECK(r.symmetrical == true);
    CHECK(r.aut_order == 24u);
    CHECK(r.self_dual);
    CHECK(r.coordinate_symmetric);
    CHECK(r.translation_symmetric);
  }
  SUBCASE("translation witness") {
    const auto phi = load_fn("table3.fn");
    const auto r = classify(phi);
    CHECK(r.translation_symmetric);
    REQUIRE(r.translation_witness);
    CHECK(*r.translation_witness == trans_pair("001"));
    CHECK(r.translation_vector == st("001"));
    CHECK(check_pair(phi, phi, *r.translation_witness));
  }
  SUBCASE("coordinate witness") {
    const auto phi = load_fn("exa17.fn");
    const auto r = classify(phi);
    CHECK(r.coordinate_symmetric);
    REQUIRE(r.coordinate_witness);
    CHECK(*r.coordinate_witness == Permutation({3, 1, 2}));
    CHECK(check_pair(phi, phi, *r.coordinate_witness_pair));
  }
  SUBCASE("translation symmetry with lambda = 0 and g' != id") {
    const auto r = classify(load_fn("table4.fn"));
    CHECK(r.translation_symmetric);
    REQUIRE(r.translation_vector);
    CHECK(*r.translation_vector == State::zeros(2));
    CHECK_FALSE(r.translation_witness->gp.is_identity());
  }
  SUBCASE("flags agree with the full searches on random maps") {
    std::mt19937_64 rng(61);
    for (int rep = 0; rep < 20; ++rep) {
      const auto phi = testing::random_table(2, rng);
      const auto r = classify(phi, {.list_aut = true});
      const auto aut = find_isos(phi, phi);
      CHECK(r.aut_order == aut.count);
      CHECK(r.aut == aut.pairs);
      CHECK(r.symmetrical == (aut.count > 1));
      CHECK(r.anti_symmetrical == (find_anti_isos(phi, phi).count > 0));
      bool coord = false, trans = false;
      for (const auto& p : aut.pairs) {
        if (p.g == p.gp && !p.g.is_identity() && p.g == permutation_bijection(Permutation({2, 1}))) coord = true;
        if (!(p.g.is_identity() && p.gp.is_identity()))
          for (std::uint32_t l = 0; l < 4; ++l)
            if (p.g == translation_bijection(State(2, l))) trans = true;
      }
      CHECK(r.coordinate_symmetric == coord);
      CHECK(r.translation_symmetric == trans);
      CHECK(r.self_dual == (dual(phi) == phi));
    }
  }
  SUBCASE("beyond the search cap") {
    const auto phi = TruthTable::from_function(4, [](std::uint32_t x) { return x ^ 0xFu; });
    const auto r = classify(phi);
    CHECK_FALSE(r.aut_order.has_value());
    CHECK_FALSE(r.anti_symmetrical.has_value());
    CHECK(r.symmetrical == true);
    CHECK(r.coordinate_symmetric);
    CHECK(r.translation_symmetric);
    CHECK(r.self_dual);
  }
}

TEST_CASE("automorphisms act on the portrait") {
  std::mt19937_64 rng(67);
  for (int rep = 0; rep < 10; ++rep) {
    const auto phi = rep < 2 ? (rep ? not2() : load_fn("table4.fn")) : testing::random_table(2, rng);
    const auto graph = build_portrait(phi);
    const std::set<std::pair<std::uint32_t, std::uint32_t>> edges(graph.edges.begin(), graph.edges.end());
    for (const auto& p : find_isos(phi, phi).pairs) {
      std::set<std::pair<std::uint32_t, std::uint32_t>> image;
      for (auto [a, b] : edges) image.emplace(p.g[a], p.g[b]);
      CHECK(image == edges);
    }
    for (const auto& p : find_anti_isos(phi, phi).pairs) {
      // anti-automorphisms reverse the arrows
      std::set<std::pair<std::uint32_t, std::uint32_t>> image;
      for (auto [a, b] : edges) image.emplace(p.g[b], p.g[a]);
      CHECK(image == edges);
    }
  }
}
