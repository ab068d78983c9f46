#pragma once

#include <bdsym/error.hpp>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bdsym {

inline constexpr int kMaxDimension = 16;

void require_dimension(int n);

/// A point of B^n. Coordinate 1 is the most significant bit of index().
class State {
 public:
  State() = default;
  State(int n, std::uint32_t index);

  static State zeros(int n) { return State(n, 0); }
  static State ones(int n) { return State(n, (std::uint32_t{1} << n) - 1); }
  /// Parses "0110"-style text, coordinate 1 leftmost.
  static State parse(std::string_view bits);

  int dim() const noexcept { return n_; }
  std::uint32_t index() const noexcept { return index_; }
  /// Coordinate i in 1..n.
  bool bit(int i) const;
  std::string to_string() const;

  State complement() const { return State(n_, ~index_ & mask()); }
  State operator^(const State& o) const;
  State operator&(const State& o) const;
  State operator|(const State& o) const;

  bool operator==(const State&) const = default;
  auto operator<=>(const State&) const = default;

 private:
  std::uint32_t mask() const { return (std::uint32_t{1} << n_) - 1; }

  int n_ = 1;
  std::uint32_t index_ = 0;
};

std::string bits_to_string(int n, std::uint32_t index);

/// A total map B^n -> B^n stored as 2^n rows in canonical index order.
class TruthTable {
 public:
  TruthTable(int n, std::vector<std::uint32_t> rows);

  static TruthTable identity(int n);
  template <typename F>
  static TruthTable from_function(int n, F&& f) {
    require_dimension(n);
    std::vector<std::uint32_t> rows(std::size_t{1} << n);
    for (std::uint32_t x = 0; x < rows.size(); ++x) rows[x] = f(x);
    return TruthTable(n, std::move(rows));
  }

  int dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return rows_.size(); }
  std::uint32_t operator[](std::uint32_t index) const { return rows_[index]; }
  std::span<const std::uint32_t> rows() const noexcept { return rows_; }

  bool operator==(const TruthTable&) const = default;

 private:
  int n_;
  std::vector<std::uint32_t> rows_;
};

/// Coordinate permutation sigma of {1..n}, stored 1-based.
class Permutation {
 public:
  explicit Permutation(std::vector<int> sigma);

  static Permutation identity(int n);

  int dim() const noexcept { return static_cast<int>(sigma_.size()); }
  int operator()(int i) const { return sigma_.at(static_cast<std::size_t>(i - 1)); }
  std::span<const int> values() const noexcept { return sigma_; }
  bool is_identity() const;
  Permutation inverse() const;
  std::string to_string() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> sigma_;
};

/// (sigma o tau)(i) = sigma(tau(i)).
Permutation compose(const Permutation& sigma, const Permutation& tau);

/// A bijection of B^n, i.e. a permutation of the 2^n canonical indices.
class BijectionTable {
 public:
  BijectionTable(int n, std::vector<std::uint32_t> map);
  explicit BijectionTable(const TruthTable& table);

  static BijectionTable identity(int n);

  int dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return map_.size(); }
  std::uint32_t operator[](std::uint32_t index) const { return map_[index]; }
  State operator()(const State& s) const;
  std::span<const std::uint32_t> map() const noexcept { return map_; }
  bool is_identity() const;
  TruthTable as_table() const { return TruthTable(n_, map_); }

  bool operator==(const BijectionTable&) const = default;
  auto operator<=>(const BijectionTable&) const = default;

 private:
  int n_;
  std::vector<std::uint32_t> map_;
};

// Evaluation.
State apply(const TruthTable& phi, const State& mu);
/// Coordinates with nu_i = 1 take Phi_i(mu), the others keep mu_i.
State nu_apply(const TruthTable& phi, const State& nu, const State& mu);
State excited(const TruthTable& phi, const State& mu);
std::vector<State> fixed_points(const TruthTable& phi);
TruthTable dual(const TruthTable& phi);

/// Raw-index forms of the above for inner loops; no dimension checks.
inline std::uint32_t nu_apply_raw(const TruthTable& phi, std::uint32_t nu, std::uint32_t mu) {
  return (mu & ~nu) | (phi[mu] & nu);
}
/// The table of Phi^nu.
TruthTable nu_table(const TruthTable& phi, std::uint32_t nu);

// Bijection algebra.
BijectionTable permutation_bijection(const Permutation& sigma);
BijectionTable translation_bijection(const State& lambda);
/// mu -> b1(b2(mu)).
BijectionTable compose(const BijectionTable& b1, const BijectionTable& b2);
BijectionTable invert(const BijectionTable& b);

// Function-file format.
TruthTable parse_function(std::string_view text);
BijectionTable parse_bijection(std::string_view text);
std::string serialize(const TruthTable& table);
std::string serialize(const BijectionTable& bijection);

/// Reads a whole file; Io error when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace bdsym
