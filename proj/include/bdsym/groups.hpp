#pragma once

#include <bdsym/morphisms.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bdsym {

/// Sorted, duplicate-free set of iso pairs of one dimension.
class PairSet {
 public:
  explicit PairSet(int n) : n_(n) {}
  PairSet(int n, std::vector<MorphismPair> pairs);

  int dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  bool contains(const MorphismPair& p) const;
  /// Returns false when already present.
  bool insert(MorphismPair p);

  const std::vector<MorphismPair>& pairs() const noexcept { return pairs_; }
  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }

  bool operator==(const PairSet&) const = default;

 private:
  int n_;
  std::vector<MorphismPair> pairs_;
};

MorphismPair identity_pair(int n);

/// (h, h') o (g, g') = (h o g, h' o g').
MorphismPair compose_pairs(const MorphismPair& p, const MorphismPair& q);

/// Closure of generators and (id, id) under composition and inversion.
PairSet generate_group(const PairSet& generators, const TruthTable& phi);

enum class GroupDefect { None, MissingIdentity, NotClosedUnderComposition, NotClosedUnderInverse, NotAnAutomorphism,
                         DimensionMismatch };

std::string_view to_string(GroupDefect d);

struct GroupCheck {
  GroupDefect defect = GroupDefect::None;
  std::string detail;

  bool ok() const { return defect == GroupDefect::None; }
  explicit operator bool() const { return ok(); }
};

GroupCheck is_group(const PairSet& s, const TruthTable& phi);

struct SymmetryReport {
  int n = 0;
  std::optional<bool> symmetrical;       // card(Aut) > 1; unknown beyond the search cap
  std::optional<bool> anti_symmetrical;  // *Aut non-empty; unknown beyond the search cap
  bool coordinate_symmetric = false;
  bool translation_symmetric = false;
  bool self_dual = false;
  std::optional<std::uint64_t> aut_order;

  std::optional<MorphismPair> symmetrical_witness;
  std::optional<MorphismPair> anti_symmetrical_witness;
  std::optional<Permutation> coordinate_witness;
  std::optional<MorphismPair> coordinate_witness_pair;
  std::optional<MorphismPair> translation_witness;
  std::optional<State> translation_vector;

  std::vector<MorphismPair> aut;  // filled only when requested
};

struct ClassifyOptions {
  int max_n = kDefaultSearchCap;
  bool list_aut = false;
};

SymmetryReport classify(const TruthTable& phi, const ClassifyOptions& opts = {});

}  // namespace bdsym
