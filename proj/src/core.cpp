#include <bdsym/core.hpp>

#include "checks.hpp"
#include "text_records.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

namespace bdsym {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadSyntax: return "BadSyntax";
    case ErrorCode::MissingRow: return "MissingRow";
    case ErrorCode::DuplicateRow: return "DuplicateRow";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BranchExplosion: return "BranchExplosion";
    case ErrorCode::NotAnAntiOrbit: return "NotAnAntiOrbit";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, int line)
    : std::runtime_error(message), code_(code), line_(line) {}

void require_dimension(int n) {
  if (n < 1 || n > kMaxDimension)
    throw Error(ErrorCode::InvalidArgument,
                "dimension " + std::to_string(n) + " outside 1.." + std::to_string(kMaxDimension));
}

using detail::require_same;

// ---------------------------------------------------------------- State

State::State(int n, std::uint32_t index) : n_(n), index_(index) {
  require_dimension(n);
  if (index >> n)
    throw Error(ErrorCode::InvalidArgument,
                "state index " + std::to_string(index) + " out of range for n=" + std::to_string(n));
}

State State::parse(std::string_view bits) {
  if (bits.empty() || bits.size() > static_cast<std::size_t>(kMaxDimension))
    throw Error(ErrorCode::BadSyntax, "bad state '" + std::string(bits) + "'");
  std::uint32_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1')
      throw Error(ErrorCode::BadSyntax, "bad state '" + std::string(bits) + "'");
    index = (index << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return State(static_cast<int>(bits.size()), index);
}

bool State::bit(int i) const {
  if (i < 1 || i > n_) throw Error(ErrorCode::InvalidArgument, "coordinate out of range");
  return (index_ >> (n_ - i)) & 1u;
}

std::string bits_to_string(int n, std::uint32_t index) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i)
    if ((index >> (n - 1 - i)) & 1u) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

std::string State::to_string() const { return bits_to_string(n_, index_); }

State State::operator^(const State& o) const {
  require_same(n_, o.n_, "xor");
  return State(n_, index_ ^ o.index_);
}
State State::operator&(const State& o) const {
  require_same(n_, o.n_, "and");
  return State(n_, index_ & o.index_);
}
State State::operator|(const State& o) const {
  require_same(n_, o.n_, "or");
  return State(n_, index_ | o.index_);
}

// ---------------------------------------------------------------- tables

TruthTable::TruthTable(int n, std::vector<std::uint32_t> rows) : n_(n), rows_(std::move(rows)) {
  require_dimension(n);
  if (rows_.size() != (std::size_t{1} << n))
    throw Error(ErrorCode::DimensionMismatch, "truth table needs exactly 2^n rows");
  for (auto r : rows_)
    if (r >> n) throw Error(ErrorCode::DimensionMismatch, "truth table output out of range");
}

TruthTable TruthTable::identity(int n) {
  return from_function(n, [](std::uint32_t x) { return x; });
}

Permutation::Permutation(std::vector<int> sigma) : sigma_(std::move(sigma)) {
  require_dimension(dim());
  std::vector<bool> seen(sigma_.size() + 1, false);
  for (int v : sigma_) {
    if (v < 1 || v > dim() || seen[static_cast<std::size_t>(v)])
      throw Error(ErrorCode::InvalidArgument, "not a permutation of 1..n");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  require_dimension(n);
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= dim(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(sigma_.size());
  for (int i = 1; i <= dim(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  std::string s;
  for (int v : sigma_) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v);
  }
  return s;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  require_same(sigma.dim(), tau.dim(), "compose");
  std::vector<int> out(static_cast<std::size_t>(sigma.dim()));
  for (int i = 1; i <= sigma.dim(); ++i) out[static_cast<std::size_t>(i - 1)] = sigma(tau(i));
  return Permutation(std::move(out));
}

BijectionTable::BijectionTable(int n, std::vector<std::uint32_t> map) : n_(n), map_(std::move(map)) {
  require_dimension(n);
  if (map_.size() != (std::size_t{1} << n))
    throw Error(ErrorCode::DimensionMismatch, "bijection needs exactly 2^n entries");
  std::vector<bool> hit(map_.size(), false);
  for (auto v : map_) {
    if (v >= map_.size() || hit[v])
      throw Error(ErrorCode::NotBijective, "map is not a permutation of the 2^n states");
    hit[v] = true;
  }
}

BijectionTable::BijectionTable(const TruthTable& table)
    : BijectionTable(table.dim(), std::vector<std::uint32_t>(table.rows().begin(), table.rows().end())) {}

BijectionTable BijectionTable::identity(int n) {
  require_dimension(n);
  std::vector<std::uint32_t> m(std::size_t{1} << n);
  std::iota(m.begin(), m.end(), 0u);
  return BijectionTable(n, std::move(m));
}

State BijectionTable::operator()(const State& s) const {
  require_same(n_, s.dim(), "bijection");
  return State(n_, map_[s.index()]);
}

bool BijectionTable::is_identity() const {
  for (std::uint32_t i = 0; i < map_.size(); ++i)
    if (map_[i] != i) return false;
  return true;
}

// ---------------------------------------------------------------- evaluation

State apply(const TruthTable& phi, const State& mu) {
  require_same(phi.dim(), mu.dim(), "apply");
  return State(phi.dim(), phi[mu.index()]);
}

State nu_apply(const TruthTable& phi, const State& nu, const State& mu) {
  require_same(phi.dim(), mu.dim(), "nu_apply");
  require_same(phi.dim(), nu.dim(), "nu_apply");
  return State(phi.dim(), nu_apply_raw(phi, nu.index(), mu.index()));
}

State excited(const TruthTable& phi, const State& mu) {
  require_same(phi.dim(), mu.dim(), "excited");
  return State(phi.dim(), phi[mu.index()] ^ mu.index());
}

std::vector<State> fixed_points(const TruthTable& phi) {
  std::vector<State> out;
  for (std::uint32_t x = 0; x < phi.size(); ++x)
    if (phi[x] == x) out.emplace_back(phi.dim(), x);
  return out;
}

TruthTable dual(const TruthTable& phi) {
  const std::uint32_t all = static_cast<std::uint32_t>(phi.size() - 1);
  return TruthTable::from_function(phi.dim(), [&](std::uint32_t x) { return phi[x ^ all] ^ all; });
}

TruthTable nu_table(const TruthTable& phi, std::uint32_t nu) {
  return TruthTable::from_function(phi.dim(), [&](std::uint32_t x) { return nu_apply_raw(phi, nu, x); });
}

BijectionTable permutation_bijection(const Permutation& sigma) {
  const int n = sigma.dim();
  std::vector<std::uint32_t> m(std::size_t{1} << n);
  for (std::uint32_t x = 0; x < m.size(); ++x) {
    std::uint32_t y = 0;
    for (int i = 1; i <= n; ++i) {
      const std::uint32_t b = (x >> (n - sigma(i))) & 1u;
      y |= b << (n - i);
    }
    m[x] = y;
  }
  return BijectionTable(n, std::move(m));
}

BijectionTable translation_bijection(const State& lambda) {
  std::vector<std::uint32_t> m(std::size_t{1} << lambda.dim());
  for (std::uint32_t x = 0; x < m.size(); ++x) m[x] = x ^ lambda.index();
  return BijectionTable(lambda.dim(), std::move(m));
}

BijectionTable compose(const BijectionTable& b1, const BijectionTable& b2) {
  require_same(b1.dim(), b2.dim(), "compose");
  std::vector<std::uint32_t> m(b1.size());
  for (std::uint32_t x = 0; x < m.size(); ++x) m[x] = b1[b2[x]];
  return BijectionTable(b1.dim(), std::move(m));
}

BijectionTable invert(const BijectionTable& b) {
  std::vector<std::uint32_t> m(b.size());
  for (std::uint32_t x = 0; x < m.size(); ++x) m[b[x]] = x;
  return BijectionTable(b.dim(), std::move(m));
}

// ---------------------------------------------------------------- file format

namespace {

using detail::at_line;
using detail::records;
using detail::trim;

std::uint32_t parse_bits(std::string_view s, int n, int line) {
  if (static_cast<int>(s.size()) != n)
    throw Error(ErrorCode::DimensionMismatch,
                at_line(line, "'" + std::string(s) + "' has " + std::to_string(s.size()) + " bits, expected " +
                                  std::to_string(n)),
                line);
  std::uint32_t v = 0;
  for (char c : s) {
    if (c != '0' && c != '1')
      throw Error(ErrorCode::BadSyntax, at_line(line, "bad bit string '" + std::string(s) + "'"), line);
    v = (v << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return v;
}

TruthTable parse_rows(std::string_view text) {
  const auto recs = records(text);
  if (recs.empty()) throw Error(ErrorCode::BadSyntax, "empty function file", 1);

  const auto& head = recs.front();
  auto h = head.text;
  if (!h.starts_with("n")) throw Error(ErrorCode::BadSyntax, at_line(head.line, "expected 'n=<int>'"), head.line);
  h = trim(h.substr(1));
  if (!h.starts_with("=")) throw Error(ErrorCode::BadSyntax, at_line(head.line, "expected 'n=<int>'"), head.line);
  h = trim(h.substr(1));
  int n = 0;
  auto [ptr, ec] = std::from_chars(h.data(), h.data() + h.size(), n);
  if (ec != std::errc{} || ptr != h.data() + h.size())
    throw Error(ErrorCode::BadSyntax, at_line(head.line, "bad dimension '" + std::string(h) + "'"), head.line);
  if (n < 1 || n > kMaxDimension)
    throw Error(ErrorCode::BadSyntax, at_line(head.line, "dimension must be in 1..16"), head.line);

  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint32_t> rows(size);
  std::vector<int> defined_at(size, 0);
  for (std::size_t i = 1; i < recs.size(); ++i) {
    const auto& r = recs[i];
    const auto arrow = r.text.find("->");
    if (arrow == std::string_view::npos)
      throw Error(ErrorCode::BadSyntax, at_line(r.line, "expected '<bits> -> <bits>'"), r.line);
    const auto in = parse_bits(trim(r.text.substr(0, arrow)), n, r.line);
    const auto out = parse_bits(trim(r.text.substr(arrow + 2)), n, r.line);
    if (defined_at[in] != 0)
      throw Error(ErrorCode::DuplicateRow,
                  at_line(r.line, "row " + bits_to_string(n, in) + " already given on line " +
                                      std::to_string(defined_at[in])),
                  r.line);
    defined_at[in] = r.line;
    rows[in] = out;
  }
  for (std::uint32_t x = 0; x < size; ++x)
    if (defined_at[x] == 0)
      throw Error(ErrorCode::MissingRow,
                  at_line(recs.back().line, "row " + bits_to_string(n, x) + " is missing"), recs.back().line);
  return TruthTable(n, std::move(rows));
}

}  // namespace

TruthTable parse_function(std::string_view text) { return parse_rows(text); }

BijectionTable parse_bijection(std::string_view text) { return BijectionTable(parse_rows(text)); }

std::string serialize(const TruthTable& table) {
  std::string out = "n=" + std::to_string(table.dim()) + "\n";
  for (std::uint32_t x = 0; x < table.size(); ++x)
    out += bits_to_string(table.dim(), x) + " -> " + bits_to_string(table.dim(), table[x]) + "\n";
  return out;
}

std::string serialize(const BijectionTable& bijection) { return serialize(bijection.as_table()); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace bdsym
