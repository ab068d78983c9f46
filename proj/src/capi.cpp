#include <bdsym/bdsym.h>

#include <bdsym/groups.hpp>
#include <bdsym/morphisms.hpp>
#include <bdsym/orbits.hpp>
#include <bdsym/portrait.hpp>
#include <bdsym/render.hpp>

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <variant>

struct bdsym_table {
  bdsym::TruthTable value;
};
struct bdsym_bijection {
  bdsym::BijectionTable value;
};
struct bdsym_schedule {
  std::variant<bdsym::SchedulePrefix, bdsym::TimedSchedule> value;
};

namespace {

thread_local std::string last_error;

bdsym_status status_of(bdsym::ErrorCode code) {
  using bdsym::ErrorCode;
  switch (code) {
    case ErrorCode::BadSyntax: return BDSYM_E_BAD_SYNTAX;
    case ErrorCode::MissingRow: return BDSYM_E_MISSING_ROW;
    case ErrorCode::DuplicateRow: return BDSYM_E_DUPLICATE_ROW;
    case ErrorCode::DimensionMismatch: return BDSYM_E_DIMENSION_MISMATCH;
    case ErrorCode::NotBijective: return BDSYM_E_NOT_BIJECTIVE;
    case ErrorCode::TooLarge: return BDSYM_E_TOO_LARGE;
    case ErrorCode::BranchExplosion: return BDSYM_E_BRANCH_EXPLOSION;
    case ErrorCode::NotAnAntiOrbit: return BDSYM_E_NOT_AN_ANTI_ORBIT;
    case ErrorCode::LengthMismatch: return BDSYM_E_LENGTH_MISMATCH;
    case ErrorCode::KindMismatch: return BDSYM_E_KIND_MISMATCH;
    case ErrorCode::NotAnAutomorphism: return BDSYM_E_NOT_AN_AUTOMORPHISM;
    case ErrorCode::InvalidArgument: return BDSYM_E_INVALID_ARGUMENT;
    case ErrorCode::Io: return BDSYM_E_IO;
  }
  return BDSYM_E_INTERNAL;
}

bdsym_status fail(bdsym_status s, std::string message) {
  last_error = std::move(message);
  return s;
}

// Runs f, translating exceptions into status codes. `where` prefixes messages
// (a file path for loaders).
template <typename F>
bdsym_status guarded(F&& f, const char* where = nullptr) {
  try {
    f();
    return BDSYM_OK;
  } catch (const bdsym::Error& e) {
    std::string msg = std::string(bdsym::to_string(e.code())) + ": " + e.what();
    if (where) msg = std::string(where) + ": " + msg;
    return fail(status_of(e.code()), std::move(msg));
  } catch (const std::bad_alloc&) {
    return fail(BDSYM_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BDSYM_E_INTERNAL, e.what());
  }
}

#define BDSYM_REQUIRE(cond)                                                  \
  do {                                                                       \
    if (!(cond)) return fail(BDSYM_E_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

char* dup(const std::string& s) {
  auto* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

bdsym::Format format_of(bdsym_format f) {
  switch (f) {
    case BDSYM_FORMAT_TEXT: return bdsym::Format::Text;
    case BDSYM_FORMAT_JSON: return bdsym::Format::Json;
    case BDSYM_FORMAT_DOT: return bdsym::Format::Dot;
  }
  throw bdsym::Error(bdsym::ErrorCode::InvalidArgument, "unknown output format");
}

bdsym::PairKind kind_of(bdsym_kind k) { return k == BDSYM_ANTI_ISO ? bdsym::PairKind::AntiIso : bdsym::PairKind::Iso; }

}  // namespace

extern "C" {

const char* bdsym_version(void) { return "1.0.0"; }

const char* bdsym_status_name(bdsym_status status) {
  switch (status) {
    case BDSYM_OK: return "OK";
    case BDSYM_E_BAD_SYNTAX: return "BadSyntax";
    case BDSYM_E_MISSING_ROW: return "MissingRow";
    case BDSYM_E_DUPLICATE_ROW: return "DuplicateRow";
    case BDSYM_E_DIMENSION_MISMATCH: return "DimensionMismatch";
    case BDSYM_E_NOT_BIJECTIVE: return "NotBijective";
    case BDSYM_E_TOO_LARGE: return "TooLarge";
    case BDSYM_E_BRANCH_EXPLOSION: return "BranchExplosion";
    case BDSYM_E_NOT_AN_ANTI_ORBIT: return "NotAnAntiOrbit";
    case BDSYM_E_LENGTH_MISMATCH: return "LengthMismatch";
    case BDSYM_E_KIND_MISMATCH: return "KindMismatch";
    case BDSYM_E_NOT_AN_AUTOMORPHISM: return "NotAnAutomorphism";
    case BDSYM_E_INVALID_ARGUMENT: return "InvalidArgument";
    case BDSYM_E_IO: return "Io";
    case BDSYM_E_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* bdsym_last_error(void) { return last_error.c_str(); }

void bdsym_string_free(char* s) { std::free(s); }

bdsym_status bdsym_state_parse(const char* bits, int* n, uint32_t* index) {
  BDSYM_REQUIRE(bits && n && index);
  return guarded([&] {
    const auto s = bdsym::State::parse(bits);
    *n = s.dim();
    *index = s.index();
  });
}

// ---- tables

bdsym_status bdsym_table_parse(const char* text, bdsym_table** out) {
  BDSYM_REQUIRE(text && out);
  return guarded([&] { *out = new bdsym_table{bdsym::parse_function(text)}; });
}

bdsym_status bdsym_table_load(const char* path, bdsym_table** out) {
  BDSYM_REQUIRE(path && out);
  return guarded([&] { *out = new bdsym_table{bdsym::parse_function(bdsym::read_file(path))}; }, path);
}

void bdsym_table_free(bdsym_table* t) { delete t; }

int bdsym_table_dim(const bdsym_table* t) { return t ? t->value.dim() : 0; }

bdsym_status bdsym_table_apply(const bdsym_table* t, uint32_t state, uint32_t* out) {
  BDSYM_REQUIRE(t && out);
  return guarded([&] { *out = bdsym::apply(t->value, bdsym::State(t->value.dim(), state)).index(); });
}

bdsym_status bdsym_table_nu_apply(const bdsym_table* t, uint32_t nu, uint32_t state, uint32_t* out) {
  BDSYM_REQUIRE(t && out);
  return guarded([&] {
    const int n = t->value.dim();
    *out = bdsym::nu_apply(t->value, bdsym::State(n, nu), bdsym::State(n, state)).index();
  });
}

bdsym_status bdsym_table_dual(const bdsym_table* t, bdsym_table** out) {
  BDSYM_REQUIRE(t && out);
  return guarded([&] { *out = new bdsym_table{bdsym::dual(t->value)}; });
}

bdsym_status bdsym_table_serialize(const bdsym_table* t, char** out) {
  BDSYM_REQUIRE(t && out);
  return guarded([&] { *out = dup(bdsym::serialize(t->value)); });
}

// ---- bijections

bdsym_status bdsym_bijection_parse(const char* text, bdsym_bijection** out) {
  BDSYM_REQUIRE(text && out);
  return guarded([&] { *out = new bdsym_bijection{bdsym::parse_bijection(text)}; });
}

bdsym_status bdsym_bijection_load(const char* path, bdsym_bijection** out) {
  BDSYM_REQUIRE(path && out);
  return guarded([&] { *out = new bdsym_bijection{bdsym::parse_bijection(bdsym::read_file(path))}; }, path);
}

bdsym_status bdsym_bijection_identity(int n, bdsym_bijection** out) {
  BDSYM_REQUIRE(out);
  return guarded([&] { *out = new bdsym_bijection{bdsym::BijectionTable::identity(n)}; });
}

bdsym_status bdsym_bijection_permutation(int n, const int* sigma, bdsym_bijection** out) {
  BDSYM_REQUIRE(sigma && out && n > 0);
  return guarded([&] {
    bdsym::Permutation p(std::vector<int>(sigma, sigma + n));
    *out = new bdsym_bijection{bdsym::permutation_bijection(p)};
  });
}

bdsym_status bdsym_bijection_translation(int n, uint32_t lambda, bdsym_bijection** out) {
  BDSYM_REQUIRE(out);
  return guarded([&] { *out = new bdsym_bijection{bdsym::translation_bijection(bdsym::State(n, lambda))}; });
}

bdsym_status bdsym_bijection_compose(const bdsym_bijection* b1, const bdsym_bijection* b2, bdsym_bijection** out) {
  BDSYM_REQUIRE(b1 && b2 && out);
  return guarded([&] { *out = new bdsym_bijection{bdsym::compose(b1->value, b2->value)}; });
}

bdsym_status bdsym_bijection_invert(const bdsym_bijection* b, bdsym_bijection** out) {
  BDSYM_REQUIRE(b && out);
  return guarded([&] { *out = new bdsym_bijection{bdsym::invert(b->value)}; });
}

void bdsym_bijection_free(bdsym_bijection* b) { delete b; }

int bdsym_bijection_dim(const bdsym_bijection* b) { return b ? b->value.dim() : 0; }

bdsym_status bdsym_bijection_map(const bdsym_bijection* b, uint32_t state, uint32_t* out) {
  BDSYM_REQUIRE(b && out);
  return guarded([&] { *out = b->value(bdsym::State(b->value.dim(), state)).index(); });
}

int bdsym_bijection_equal(const bdsym_bijection* a, const bdsym_bijection* b) {
  return a && b && a->value == b->value;
}

bdsym_status bdsym_bijection_serialize(const bdsym_bijection* b, char** out) {
  BDSYM_REQUIRE(b && out);
  return guarded([&] { *out = dup(bdsym::serialize(b->value)); });
}

bdsym_status bdsym_pair_parse(const char* text, bdsym_bijection** g, bdsym_bijection** gp) {
  BDSYM_REQUIRE(text && g && gp);
  return guarded([&] {
    auto p = bdsym::parse_pair(text);
    *g = new bdsym_bijection{p.g};
    *gp = new bdsym_bijection{p.gp};
  });
}

bdsym_status bdsym_pair_load(const char* path, bdsym_bijection** g, bdsym_bijection** gp) {
  BDSYM_REQUIRE(path && g && gp);
  return guarded(
      [&] {
        auto p = bdsym::parse_pair(bdsym::read_file(path));
        *g = new bdsym_bijection{p.g};
        *gp = new bdsym_bijection{p.gp};
      },
      path);
}

// ---- schedules

bdsym_status bdsym_schedule_parse(const char* text, bdsym_schedule** out) {
  BDSYM_REQUIRE(text && out);
  return guarded([&] { *out = new bdsym_schedule{bdsym::parse_schedule(text)}; });
}

bdsym_status bdsym_schedule_load(const char* path, bdsym_schedule** out) {
  BDSYM_REQUIRE(path && out);
  return guarded([&] { *out = new bdsym_schedule{bdsym::parse_schedule(bdsym::read_file(path))}; }, path);
}

void bdsym_schedule_free(bdsym_schedule* s) { delete s; }

int bdsym_schedule_is_timed(const bdsym_schedule* s) {
  return s && std::holds_alternative<bdsym::TimedSchedule>(s->value);
}

int bdsym_schedule_dim(const bdsym_schedule* s) {
  if (!s) return 0;
  return std::visit([](const auto& v) { return v.dim(); }, s->value);
}

// ---- analyses

bdsym_status bdsym_show(const bdsym_table* phi, bdsym_format fmt, char** out) {
  BDSYM_REQUIRE(phi && out);
  return guarded([&] { *out = dup(bdsym::render_show(phi->value, format_of(fmt))); });
}

bdsym_status bdsym_portrait(const bdsym_table* phi, bdsym_format fmt, char** out) {
  BDSYM_REQUIRE(phi && out);
  return guarded([&] { *out = dup(bdsym::render_portrait(bdsym::build_portrait(phi->value), format_of(fmt))); });
}

bdsym_status bdsym_orbit(const bdsym_table* phi, uint32_t mu, const bdsym_schedule* sched, bdsym_format fmt,
                         char** out) {
  BDSYM_REQUIRE(phi && sched && out);
  return guarded([&] {
    const bdsym::State start(phi->value.dim(), mu);
    if (const auto* rho = std::get_if<bdsym::TimedSchedule>(&sched->value)) {
      *out = dup(bdsym::render_signal(bdsym::continuous_orbit(phi->value, start, *rho), format_of(fmt)));
    } else {
      const auto& alpha = std::get<bdsym::SchedulePrefix>(sched->value);
      *out = dup(bdsym::render_orbit(bdsym::discrete_orbit(phi->value, start, alpha), format_of(fmt)));
    }
  });
}

bdsym_status bdsym_anti_orbit(const bdsym_table* phi, uint32_t mu, const bdsym_schedule* sched, size_t branch_cap,
                              size_t max_listed, bdsym_format fmt, char** out, size_t* branch_count) {
  BDSYM_REQUIRE(phi && sched && out);
  return guarded([&] {
    const bdsym::State start(phi->value.dim(), mu);
    const auto* rho = std::get_if<bdsym::TimedSchedule>(&sched->value);
    const auto& alpha = rho ? rho->schedule() : std::get<bdsym::SchedulePrefix>(sched->value);
    const auto branches = bdsym::anti_orbit_branches(phi->value, start, alpha,
                                                     branch_cap ? branch_cap : bdsym::kDefaultBranchCap);
    if (branch_count) *branch_count = branches.size();
    *out = dup(bdsym::render_branches(branches, rho, phi->value, format_of(fmt), max_listed));
  });
}

bdsym_status bdsym_check_pair(const bdsym_table* phi, const bdsym_table* psi, const bdsym_bijection* g,
                              const bdsym_bijection* gp, bdsym_kind kind, int* holds) {
  BDSYM_REQUIRE(phi && psi && g && gp && holds);
  return guarded([&] {
    *holds = bdsym::check_pair(phi->value, psi->value, bdsym::MorphismPair(g->value, gp->value, kind_of(kind)));
  });
}

bdsym_status bdsym_search(const bdsym_table* phi, const bdsym_table* psi, bdsym_kind kind,
                          const bdsym_search_options* opts, bdsym_format fmt, char** out, size_t* count,
                          int* truncated) {
  BDSYM_REQUIRE(phi && psi && out);
  return guarded([&] {
    bdsym::SearchOptions so;
    if (opts) {
      if (opts->limit) so.limit = opts->limit;
      so.count_only = opts->count_only != 0;
      if (opts->max_n > 0) so.max_n = opts->max_n;
    }
    const auto result = bdsym::find_pairs(kind_of(kind), phi->value, psi->value, so);
    if (count) *count = result.count;
    if (truncated) *truncated = result.truncated;
    *out = dup(bdsym::render_search(result, kind_of(kind), format_of(fmt)));
  });
}

void bdsym_verify_options_init(bdsym_verify_options* opts) {
  if (!opts) return;
  const bdsym::VerifyOptions d;
  opts->horizon = d.horizon;
  opts->budget = d.budget;
  opts->seed = d.seed;
}

bdsym_status bdsym_verify(const bdsym_table* phi, const bdsym_table* psi, const bdsym_bijection* g,
                          const bdsym_bijection* gp, bdsym_kind kind, const bdsym_verify_options* opts,
                          bdsym_format fmt, char** out, int* pass) {
  BDSYM_REQUIRE(phi && psi && g && gp && out);
  return guarded([&] {
    bdsym::VerifyOptions vo;
    if (opts) {
      vo.horizon = opts->horizon;
      vo.budget = opts->budget;
      vo.seed = opts->seed;
    }
    const auto report = kind == BDSYM_ANTI_ISO
                            ? bdsym::verify_theorem28(phi->value, psi->value, g->value, gp->value, vo)
                            : bdsym::verify_theorem29(phi->value, psi->value, g->value, gp->value, vo);
    if (pass) *pass = report.pass();
    *out = dup(bdsym::render_verification(report, format_of(fmt)));
  });
}

bdsym_status bdsym_group(const bdsym_table* phi, const bdsym_bijection* const* gs, const bdsym_bijection* const* gps,
                         size_t count, bdsym_format fmt, char** out, size_t* order) {
  BDSYM_REQUIRE(phi && out && (count == 0 || (gs && gps)));
  return guarded([&] {
    bdsym::PairSet gens(phi->value.dim());
    for (size_t i = 0; i < count; ++i) {
      if (!gs[i] || !gps[i]) throw bdsym::Error(bdsym::ErrorCode::InvalidArgument, "null generator");
      gens.insert(bdsym::MorphismPair(gs[i]->value, gps[i]->value));
    }
    const auto group = bdsym::generate_group(gens, phi->value);
    if (order) *order = group.size();
    *out = dup(bdsym::render_group(group, bdsym::is_group(group, phi->value), format_of(fmt)));
  });
}

bdsym_status bdsym_classify(const bdsym_table* phi, int max_n, int list_aut, bdsym_format fmt, char** out) {
  BDSYM_REQUIRE(phi && out);
  return guarded([&] {
    bdsym::ClassifyOptions co;
    if (max_n > 0) co.max_n = max_n;
    co.list_aut = list_aut != 0;
    *out = dup(bdsym::render_classification(bdsym::classify(phi->value, co), format_of(fmt)));
  });
}

bdsym_status bdsym_equal_systems(const bdsym_table* left, const bdsym_table* right, int horizon,
                                 bdsym_mode right_mode, bdsym_format fmt, char** out, int* equal) {
  BDSYM_REQUIRE(left && right && out);
  return guarded([&] {
    if (left->value.dim() != right->value.dim())
      throw bdsym::Error(bdsym::ErrorCode::DimensionMismatch, "systems have different dimensions");
    const auto l = bdsym::system_prefixes(left->value, horizon, bdsym::SystemMode::Forward);
    const auto r = bdsym::system_prefixes(right->value, horizon,
                                          right_mode == BDSYM_ANTI ? bdsym::SystemMode::Anti
                                                                   : bdsym::SystemMode::Forward);
    if (equal) *equal = l == r;
    *out = dup(bdsym::render_system_comparison(l, r, format_of(fmt)));
  });
}

}  // extern "C"
