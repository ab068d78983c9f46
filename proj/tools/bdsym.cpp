// bdsym: command-line front end. Talks to the library through the C API only.

#include <bdsym/bdsym.h>

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

struct InputError {
  std::string message;
};

// RAII wrappers over the opaque handles.
struct TableDeleter {
  void operator()(bdsym_table* t) const { bdsym_table_free(t); }
};
struct BijectionDeleter {
  void operator()(bdsym_bijection* b) const { bdsym_bijection_free(b); }
};
struct ScheduleDeleter {
  void operator()(bdsym_schedule* s) const { bdsym_schedule_free(s); }
};
struct StringDeleter {
  void operator()(char* s) const { bdsym_string_free(s); }
};
using Table = std::unique_ptr<bdsym_table, TableDeleter>;
using Bijection = std::unique_ptr<bdsym_bijection, BijectionDeleter>;
using Schedule = std::unique_ptr<bdsym_schedule, ScheduleDeleter>;
using Text = std::unique_ptr<char, StringDeleter>;

void check(bdsym_status s) {
  if (s != BDSYM_OK) throw InputError{bdsym_last_error()};
}

Table load_table(const std::string& path) {
  bdsym_table* t = nullptr;
  check(bdsym_table_load(path.c_str(), &t));
  return Table(t);
}

Bijection load_bijection(const std::string& path) {
  bdsym_bijection* b = nullptr;
  check(bdsym_bijection_load(path.c_str(), &b));
  return Bijection(b);
}

std::pair<Bijection, Bijection> load_pair(const std::string& path) {
  bdsym_bijection* g = nullptr;
  bdsym_bijection* gp = nullptr;
  check(bdsym_pair_load(path.c_str(), &g, &gp));
  return {Bijection(g), Bijection(gp)};
}

// Either one pair file or two bijection files (g then g').
std::pair<Bijection, Bijection> load_morphism(const std::vector<std::string>& files) {
  if (files.size() == 1) return load_pair(files[0]);
  if (files.size() == 2) return {load_bijection(files[0]), load_bijection(files[1])};
  throw InputError{"expected a pair file or two bijection files (g, g')"};
}

Schedule load_schedule(const std::string& path) {
  bdsym_schedule* s = nullptr;
  check(bdsym_schedule_load(path.c_str(), &s));
  return Schedule(s);
}

uint32_t parse_state(const std::string& bits, int n) {
  int dim = 0;
  uint32_t index = 0;
  check(bdsym_state_parse(bits.c_str(), &dim, &index));
  if (dim != n) throw InputError{"state '" + bits + "' has dimension " + std::to_string(dim) + ", expected " +
                                 std::to_string(n)};
  return index;
}

void emit(char* raw) {
  Text text(raw);
  std::fputs(text.get(), stdout);
}

int search_cap() {
  if (const char* env = std::getenv("BDSYM_MAX_N")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    throw InputError{"BDSYM_MAX_N must be a positive integer"};
  }
  return 0;
}

struct Config {
  int horizon = 4;
  uint64_t budget = 1000;
  uint64_t seed = 0;
  bool seed_given = false;
  std::string format = "text";
  bool format_given = false;
  size_t limit = 0;
  bool count = false;
  bool all = false;
};

bdsym_format format_for(const Config& cfg, const std::string& sub) {
  const std::string f = cfg.format_given ? cfg.format : (sub == "portrait" ? "dot" : "text");
  if (f == "dot" && sub != "portrait")
    throw CLI::ValidationError("--format", "dot output is only available for 'portrait'");
  if (f == "json") return BDSYM_FORMAT_JSON;
  if (f == "dot") return BDSYM_FORMAT_DOT;
  return BDSYM_FORMAT_TEXT;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetry analysis of asynchronous Boolean dynamical systems", "bdsym"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--horizon", cfg.horizon, "Schedule horizon K (>= -1)")->check(CLI::Range(-1, 64));
  app.add_option("--budget", cfg.budget, "Sample budget for trajectory checks");
  app.add_option("--seed", cfg.seed, "Random seed for sampled checks")->each([&](const std::string&) {
    cfg.seed_given = true;
  });
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->each([&](const std::string&) { cfg.format_given = true; });
  app.add_option("--limit", cfg.limit, "Stop a search after this many pairs")->check(CLI::PositiveNumber);
  app.add_flag("--count", cfg.count, "Only count search results");
  app.add_flag("--all", cfg.all, "List everything (all anti-orbit branches, the whole Aut in classify)");

  std::string phi_path, psi_path, state_bits, sched_path;
  std::vector<std::string> files;

  auto* show = app.add_subcommand("show", "Print a function with excited masks, fixed points and self-duality");
  show->add_option("function", phi_path)->required();

  auto* portrait = app.add_subcommand("portrait", "Asynchronous state portrait (dot, json or text)");
  portrait->add_option("function", phi_path)->required();

  auto* orbit = app.add_subcommand("orbit", "Forward semi-orbit for a schedule file");
  orbit->add_option("function", phi_path)->required();
  orbit->add_option("state", state_bits, "Initial state, e.g. 10")->required();
  orbit->add_option("schedule", sched_path)->required();

  auto* anti_orbit = app.add_subcommand("anti-orbit", "Backward anti-semi-orbit branches for a schedule file (first 16 unless --all)");
  anti_orbit->add_option("function", phi_path)->required();
  anti_orbit->add_option("state", state_bits)->required();
  anti_orbit->add_option("schedule", sched_path)->required();

  auto* iso = app.add_subcommand("iso", "Exhaustive search of isomorphism pairs");
  iso->add_option("phi", phi_path)->required();
  iso->add_option("psi", psi_path)->required();
  auto* anti_iso = app.add_subcommand("anti-iso", "Exhaustive search of anti-isomorphism pairs");
  anti_iso->add_option("phi", phi_path)->required();
  anti_iso->add_option("psi", psi_path)->required();
  auto* aut = app.add_subcommand("aut", "Automorphism pairs of a function");
  aut->add_option("function", phi_path)->required();
  auto* anti_aut = app.add_subcommand("anti-aut", "Anti-automorphism pairs of a function");
  anti_aut->add_option("function", phi_path)->required();

  auto* group = app.add_subcommand("group", "Group generated by automorphism pair files");
  group->add_option("function", phi_path)->required();
  group->add_option("pairs", files, "Generator pair files")->required();

  auto* classify = app.add_subcommand("classify", "Symmetry classification");
  classify->add_option("function", phi_path)->required();

  bool anti = false;
  auto* check_pair = app.add_subcommand("check-pair", "Check a pair (g, g') against two functions");
  check_pair->add_flag("--anti", anti, "Check the anti-isomorphism square");
  check_pair->add_option("phi", phi_path)->required();
  check_pair->add_option("psi", psi_path)->required();
  check_pair->add_option("pair", files, "A pair file, or g and g' bijection files")->required()->expected(1, 2);

  bool thm29 = false, thm28 = false;
  auto* verify = app.add_subcommand("verify", "Check the equivalent characterisations of an (anti-)isomorphism");
  auto* opt29 = verify->add_flag("--thm29", thm29, "Isomorphism equivalences");
  auto* opt28 = verify->add_flag("--thm28", thm28, "Anti-isomorphism equivalences");
  opt29->excludes(opt28);
  verify->add_option("phi", phi_path)->required();
  verify->add_option("psi", psi_path)->required();
  verify->add_option("pair", files, "A pair file, or g and g' bijection files")->required()->expected(1, 2);

  std::string mode = "forward";
  auto* equal = app.add_subcommand("equal-systems",
                                   "Compare forward prefixes of LEFT with the --mode prefixes of RIGHT");
  equal->add_option("left", phi_path)->required();
  equal->add_option("right", psi_path)->required();
  equal->add_option("--mode", mode, "Semantics for RIGHT")->check(CLI::IsMember({"forward", "anti"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitError;
  }

  auto* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();

  try {
    const bdsym_format fmt = format_for(cfg, name);
    char* out = nullptr;

    if (name == "show") {
      auto phi = load_table(phi_path);
      check(bdsym_show(phi.get(), fmt, &out));
      emit(out);
      return kExitOk;
    }
    if (name == "portrait") {
      auto phi = load_table(phi_path);
      check(bdsym_portrait(phi.get(), fmt, &out));
      emit(out);
      return kExitOk;
    }
    if (name == "orbit" || name == "anti-orbit") {
      auto phi = load_table(phi_path);
      auto sched = load_schedule(sched_path);
      const auto mu = parse_state(state_bits, bdsym_table_dim(phi.get()));
      if (name == "orbit") {
        check(bdsym_orbit(phi.get(), mu, sched.get(), fmt, &out));
        emit(out);
        return kExitOk;
      }
      size_t count = 0;
      check(bdsym_anti_orbit(phi.get(), mu, sched.get(), 0, cfg.all ? SIZE_MAX : 16, fmt, &out, &count));
      emit(out);
      return count > 0 ? kExitOk : kExitFalse;
    }
    if (name == "iso" || name == "anti-iso" || name == "aut" || name == "anti-aut") {
      auto phi = load_table(phi_path);
      auto psi = (name == "aut" || name == "anti-aut") ? Table() : load_table(psi_path);
      const bdsym_kind kind = (name == "iso" || name == "aut") ? BDSYM_ISO : BDSYM_ANTI_ISO;
      bdsym_search_options so{cfg.limit, cfg.count ? 1 : 0, search_cap()};
      size_t count = 0;
      int truncated = 0;
      check(bdsym_search(phi.get(), psi ? psi.get() : phi.get(), kind, &so, fmt, &out, &count, &truncated));
      emit(out);
      return count > 0 ? kExitOk : kExitFalse;
    }
    if (name == "group") {
      auto phi = load_table(phi_path);
      std::vector<Bijection> owned;
      std::vector<const bdsym_bijection*> gs, gps;
      for (const auto& f : files) {
        auto [g, gp] = load_pair(f);
        gs.push_back(g.get());
        gps.push_back(gp.get());
        owned.push_back(std::move(g));
        owned.push_back(std::move(gp));
      }
      size_t order = 0;
      check(bdsym_group(phi.get(), gs.data(), gps.data(), gs.size(), fmt, &out, &order));
      emit(out);
      return kExitOk;
    }
    if (name == "classify") {
      auto phi = load_table(phi_path);
      check(bdsym_classify(phi.get(), search_cap(), cfg.all ? 1 : 0, fmt, &out));
      emit(out);
      return kExitOk;
    }
    if (name == "check-pair") {
      auto phi = load_table(phi_path);
      auto psi = load_table(psi_path);
      auto [g, gp] = load_morphism(files);
      int holds = 0;
      check(bdsym_check_pair(phi.get(), psi.get(), g.get(), gp.get(), anti ? BDSYM_ANTI_ISO : BDSYM_ISO, &holds));
      if (fmt == BDSYM_FORMAT_JSON)
        std::printf("{\"holds\": %s, \"kind\": \"%s\"}\n", holds ? "true" : "false", anti ? "anti-iso" : "iso");
      else
        std::printf("%s\n", holds ? "holds" : "fails");
      return holds ? kExitOk : kExitFalse;
    }
    if (name == "verify") {
      if (!thm29 && !thm28) throw CLI::ValidationError("verify", "one of --thm29 or --thm28 is required");
      auto phi = load_table(phi_path);
      auto psi = load_table(psi_path);
      auto [g, gp] = load_morphism(files);
      bdsym_verify_options vo;
      bdsym_verify_options_init(&vo);
      vo.horizon = cfg.horizon;
      vo.budget = cfg.budget;
      if (cfg.seed_given) vo.seed = cfg.seed;
      int pass = 0;
      check(bdsym_verify(phi.get(), psi.get(), g.get(), gp.get(), thm28 ? BDSYM_ANTI_ISO : BDSYM_ISO, &vo, fmt,
                         &out, &pass));
      emit(out);
      return pass ? kExitOk : kExitFalse;
    }
    if (name == "equal-systems") {
      auto left = load_table(phi_path);
      auto right = load_table(psi_path);
      int eq = 0;
      check(bdsym_equal_systems(left.get(), right.get(), cfg.horizon, mode == "anti" ? BDSYM_ANTI : BDSYM_FORWARD,
                                fmt, &out, &eq));
      emit(out);
      return eq ? kExitOk : kExitFalse;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "bdsym: " << e.what() << "\n" << app.help();
    return kExitError;
  } catch (const InputError& e) {
    std::cerr << "bdsym: " << e.message << "\n";
    return kExitError;
  }
  return kExitError;
}
