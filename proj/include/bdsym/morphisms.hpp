#pragma once

#include <bdsym/core.hpp>
#include <bdsym/orbits.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bdsym {

enum class PairKind { Iso, AntiIso };

std::string_view to_string(PairKind kind);

/// A couple (g, g') of bijections; g acts on states, g' on update masks.
struct MorphismPair {
  MorphismPair(BijectionTable g, BijectionTable gp, PairKind kind = PairKind::Iso);

  BijectionTable g;
  BijectionTable gp;
  PairKind kind;

  int dim() const { return g.dim(); }

  bool operator==(const MorphismPair&) const = default;
  auto operator<=>(const MorphismPair&) const = default;
};

/// g(Phi^nu(mu)) = Psi^{g'(nu)}(g(mu)) for every nu, mu.
bool check_iso(const TruthTable& phi, const TruthTable& psi, const BijectionTable& g, const BijectionTable& gp);
/// Psi^{g'(nu)}(g(Phi^nu(mu))) = g(mu) for every nu, mu.
bool check_anti_iso(const TruthTable& phi, const TruthTable& psi, const BijectionTable& g, const BijectionTable& gp);
bool check_pair(const TruthTable& phi, const TruthTable& psi, const MorphismPair& p);

inline constexpr int kDefaultSearchCap = 3;

struct SearchOptions {
  std::optional<std::size_t> limit;
  bool count_only = false;
  int max_n = kDefaultSearchCap;
};

struct SearchResult {
  std::vector<MorphismPair> pairs;  // empty when count_only
  std::size_t count = 0;
  bool truncated = false;  // limit reached before the search finished
};

/// Every (g, g') with check_iso true, ordered by g's map then g''s map.
SearchResult find_isos(const TruthTable& phi, const TruthTable& psi, const SearchOptions& opts = {});
SearchResult find_anti_isos(const TruthTable& phi, const TruthTable& psi, const SearchOptions& opts = {});
SearchResult find_pairs(PairKind kind, const TruthTable& phi, const TruthTable& psi, const SearchOptions& opts = {});

/// All g' completing a fixed g, in lexicographic order. No dimension cap: the
/// work is one perfect-matching enumeration over 2^n x 2^n candidates.
std::vector<BijectionTable> completions(PairKind kind, const TruthTable& phi, const TruthTable& psi,
                                        const BijectionTable& g, std::optional<std::size_t> limit = {});

/// (g^-1, g'^-1), same kind.
MorphismPair invert_pair(const MorphismPair& p);

/// Pair file: a "g:" block and a "g':" block, each in bijection-file format.
MorphismPair parse_pair(std::string_view text, PairKind kind = PairKind::Iso);
std::string serialize(const MorphismPair& p);

struct StatementResult {
  std::string label;
  bool pass = true;
  std::uint64_t checked = 0;
  std::string counterexample;  // empty when pass
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2b00u;

struct VerifyOptions {
  int horizon = 4;
  std::uint64_t budget = 1000;
  std::uint64_t seed = kDefaultSeed;
};

struct VerificationReport {
  int theorem = 29;  // 29: isomorphism, 28: anti-isomorphism
  StatementResult a, b, c;
  int horizon = 0;
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  std::uint64_t samples = 0;
  std::string reading;  // how b) and c) were interpreted

  bool pass() const { return a.pass && b.pass && c.pass; }
  bool verdicts_agree() const { return a.pass == b.pass && b.pass == c.pass; }
  /// a) holds but a relational statement failed; needs manual analysis.
  bool flagged() const { return a.pass && !(b.pass && c.pass); }
};

VerificationReport verify_theorem29(const TruthTable& phi, const TruthTable& psi, const BijectionTable& g,
                                    const BijectionTable& gp, const VerifyOptions& opts = {});
VerificationReport verify_theorem28(const TruthTable& phi, const TruthTable& psi, const BijectionTable& g,
                                    const BijectionTable& gp, const VerifyOptions& opts = {});

}  // namespace bdsym
