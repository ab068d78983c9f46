#include <bdsym/render.hpp>

#include <json.hpp>

#include <algorithm>
#include <array>
#include <charconv>

namespace bdsym {

using nlohmann::json;

namespace {

json indices(const BijectionTable& b) { return json(std::vector<std::uint32_t>(b.map().begin(), b.map().end())); }

json pair_json(const MorphismPair& p) {
  return json{{"g", indices(p.g)}, {"gp", indices(p.gp)}, {"kind", std::string(to_string(p.kind))}};
}

std::string map_text(const BijectionTable& b) {
  std::string s;
  for (std::uint32_t x = 0; x < b.size(); ++x) {
    s += s.empty() ? "" : " ";
    s += bits_to_string(b.dim(), b[x]);
  }
  return s;
}

std::string pair_text(const MorphismPair& p) { return "g=[" + map_text(p.g) + "] g'=[" + map_text(p.gp) + "]"; }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string yes_no(const std::optional<bool>& b) { return b ? yes_no(*b) : "unknown"; }

json seq_json(const std::vector<std::uint32_t>& seq, int n) {
  json a = json::array();
  for (auto v : seq) a.push_back(bits_to_string(n, v));
  return a;
}

void require_text_or_json(Format f, const char* what) {
  if (f == Format::Dot) throw Error(ErrorCode::InvalidArgument, std::string("dot format is not available for ") + what);
}

}  // namespace

std::string format_time(double t) {
  std::array<char, 64> buf{};
  auto [p, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), t);
  return std::string(buf.data(), p);
}

std::string render_show(const TruthTable& phi, Format f) {
  require_text_or_json(f, "show");
  const int n = phi.dim();
  const auto fixed = fixed_points(phi);
  const bool self_dual = dual(phi) == phi;
  if (f == Format::Json) {
    json rows = json::array();
    for (std::uint32_t x = 0; x < phi.size(); ++x)
      rows.push_back({{"in", bits_to_string(n, x)}, {"out", bits_to_string(n, phi[x])},
                      {"excited", bits_to_string(n, phi[x] ^ x)}});
    json fp = json::array();
    for (const auto& s : fixed) fp.push_back(s.to_string());
    return dump({{"n", n}, {"rows", rows}, {"fixed_points", fp}, {"self_dual", self_dual}});
  }
  std::string out = "n=" + std::to_string(n) + "\n";
  for (std::uint32_t x = 0; x < phi.size(); ++x)
    out += bits_to_string(n, x) + " -> " + bits_to_string(n, phi[x]) + "   exc=" + bits_to_string(n, phi[x] ^ x) + "\n";
  out += "fixed points:";
  for (const auto& s : fixed) out += " " + s.to_string();
  if (fixed.empty()) out += " (none)";
  out += "\nself-dual: " + yes_no(self_dual) + "\n";
  return out;
}

std::string render_portrait(const PortraitGraph& graph, Format f) {
  if (f == Format::Dot) return render_dot(graph);
  const int n = graph.n;
  if (f == Format::Json) {
    json nodes = json::array();
    for (std::uint32_t x = 0; x < graph.excited.size(); ++x)
      nodes.push_back({{"state", bits_to_string(n, x)}, {"excited", bits_to_string(n, graph.excited[x])}});
    json edges = json::array();
    for (const auto& [a, b] : graph.edges) edges.push_back({bits_to_string(n, a), bits_to_string(n, b)});
    return dump({{"nodes", nodes}, {"edges", edges}});
  }
  std::string out;
  for (std::uint32_t x = 0; x < graph.excited.size(); ++x) {
    out += bits_to_string(n, x) + " exc=" + bits_to_string(n, graph.excited[x]) + " ->";
    const auto succ = graph.successors(x);
    for (auto s : succ) out += " " + bits_to_string(n, s);
    if (succ.empty()) out += " (stable)";
    out += "\n";
  }
  return out;
}

std::string render_orbit(const OrbitPrefix& orbit, Format f) {
  require_text_or_json(f, "orbits");
  if (f == Format::Json) {
    json values = json::array();
    for (const auto& v : orbit.values()) values.push_back(v.to_string());
    return dump({{"start", orbit.start().to_string()}, {"values", values}});
  }
  std::string out;
  for (int k = -1; k <= orbit.horizon(); ++k) out += "k=" + std::to_string(k) + " " + orbit.at(k).to_string() + "\n";
  return out;
}

namespace {

json signal_json(const PiecewiseSignal& s) {
  json bps = json::array();
  for (const auto& [t, v] : s.breakpoints()) bps.push_back(json::array({t, v.to_string()}));
  return {{"initial", s.initial().to_string()}, {"breakpoints", bps}};
}

std::string signal_text(const PiecewiseSignal& s) {
  std::string out;
  std::string from = "-inf";
  std::string value = s.initial().to_string();
  for (const auto& [t, v] : s.breakpoints()) {
    out += (from == "-inf" ? "(" : "[") + from + ", " + format_time(t) + ") " + value + "\n";
    from = format_time(t);
    value = v.to_string();
  }
  out += (from == "-inf" ? "(" : "[") + from + ", inf) " + value + "\n";
  return out;
}

}  // namespace

std::string render_signal(const PiecewiseSignal& signal, Format f) {
  require_text_or_json(f, "signals");
  return f == Format::Json ? dump(signal_json(signal)) : signal_text(signal);
}

std::string render_branches(const std::vector<OrbitPrefix>& branches, const TimedSchedule* rho,
                            const TruthTable& phi, Format f, std::size_t max_listed) {
  require_text_or_json(f, "anti-orbits");
  const auto listed = std::min(branches.size(), max_listed);
  if (f == Format::Json) {
    json arr = json::array();
    for (std::size_t i = 0; i < listed; ++i) {
      const auto& b = branches[i];
      if (rho) {
        arr.push_back(signal_json(continuous_anti_orbit(phi, b, *rho)));
      } else {
        json values = json::array();
        for (const auto& v : b.values()) values.push_back(v.to_string());
        arr.push_back(values);
      }
    }
    return dump({{"count", branches.size()}, {"listed", listed}, {"branches", arr}});
  }
  std::string out = "branches: " + std::to_string(branches.size()) + "\n";
  for (std::size_t i = 0; i < listed; ++i) {
    out += "#" + std::to_string(i + 1) + "\n";
    if (rho) {
      out += signal_text(continuous_anti_orbit(phi, branches[i], *rho));
    } else {
      out += render_orbit(branches[i], Format::Text);
    }
  }
  if (listed < branches.size()) out += "... " + std::to_string(branches.size() - listed) + " more (use --all)\n";
  return out;
}

std::string render_search(const SearchResult& result, PairKind kind, Format f) {
  require_text_or_json(f, "search results");
  std::string out;
  if (f == Format::Json) {
    for (const auto& p : result.pairs) out += pair_json(p).dump() + "\n";
    if (result.pairs.empty() && result.count > 0)
      out += json{{"count", result.count}, {"kind", std::string(to_string(kind))}}.dump() + "\n";
    return out;
  }
  out = std::string(to_string(kind)) + " pairs: " + std::to_string(result.count) + (result.truncated ? " (limit reached)" : "") +
        "\n";
  for (const auto& p : result.pairs) out += "  " + pair_text(p) + "\n";
  if (result.count == 0) out += "  []\n";
  return out;
}

std::string render_verification(const VerificationReport& r, Format f) {
  require_text_or_json(f, "verification reports");
  if (f == Format::Json) {
    json st = json::object();
    for (const auto* s : {&r.a, &r.b, &r.c}) {
      json e{{"pass", s->pass}, {"checked", s->checked}};
      e["counterexample"] = s->pass ? json(nullptr) : json(s->counterexample);
      st[s->label] = e;
    }
    return dump({{"theorem", r.theorem == 29 ? "iso" : "anti-iso"},
                 {"statements", st},
                 {"pass", r.pass()},
                 {"verdicts_agree", r.verdicts_agree()},
                 {"flagged", r.flagged()},
                 {"horizon", r.horizon},
                 {"budget", r.budget},
                 {"seed", r.seed},
                 {"exhaustive", r.exhaustive},
                 {"samples", r.samples},
                 {"reading", r.reading}});
  }
  std::string out = std::string(r.theorem == 29 ? "isomorphism" : "anti-isomorphism") + " equivalences, horizon " +
                    std::to_string(r.horizon) + ", " + (r.exhaustive ? "exhaustive" : "sampled") + " (" +
                    std::to_string(r.samples) + " samples, seed " + std::to_string(r.seed) + ")\n";
  for (const auto* s : {&r.a, &r.b, &r.c}) {
    out += "  " + s->label + ") " + (s->pass ? "pass" : "FAIL") + "  [" + std::to_string(s->checked) + " checks]";
    if (!s->pass) out += "  " + s->counterexample;
    out += "\n";
  }
  out += "verdicts agree: " + yes_no(r.verdicts_agree()) + "\n";
  if (r.flagged()) out += "FLAG: a) holds but a trajectory statement failed; manual analysis needed\n";
  out += "reading: " + r.reading + "\n";
  return out;
}

std::string render_group(const PairSet& group, const GroupCheck& check, Format f) {
  require_text_or_json(f, "groups");
  const bool symmetry_group = check.ok() && group.size() > 1;
  if (f == Format::Json) {
    json pairs = json::array();
    for (const auto& p : group) pairs.push_back(pair_json(p));
    return dump({{"order", group.size()},
                 {"pairs", pairs},
                 {"flags", {{"is_group", check.ok()}, {"symmetry_group", symmetry_group}}},
                 {"witnesses", json::object()}});
  }
  std::string out = "order: " + std::to_string(group.size()) + "\n";
  for (const auto& p : group) out += "  " + pair_text(p) + "\n";
  out += "group: " + std::string(to_string(check.defect)) + "\n";
  out += "group of symmetry: " + yes_no(symmetry_group) + "\n";
  return out;
}

std::string render_classification(const SymmetryReport& r, Format f) {
  require_text_or_json(f, "classification reports");
  if (f == Format::Json) {
    auto opt = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
    json flags{{"symmetrical", opt(r.symmetrical)},
               {"anti_symmetrical", opt(r.anti_symmetrical)},
               {"coordinate_symmetric", r.coordinate_symmetric},
               {"translation_symmetric", r.translation_symmetric},
               {"self_dual", r.self_dual}};
    json w = json::object();
    if (r.symmetrical_witness) w["symmetrical"] = pair_json(*r.symmetrical_witness);
    if (r.anti_symmetrical_witness) w["anti_symmetrical"] = pair_json(*r.anti_symmetrical_witness);
    if (r.coordinate_witness) {
      w["coordinate_symmetric"] = pair_json(*r.coordinate_witness_pair);
      w["coordinate_symmetric"]["sigma"] = std::vector<int>(r.coordinate_witness->values().begin(),
                                                            r.coordinate_witness->values().end());
    }
    if (r.translation_witness) {
      w["translation_symmetric"] = pair_json(*r.translation_witness);
      w["translation_symmetric"]["lambda"] = r.translation_vector->to_string();
    }
    json pairs = json::array();
    for (const auto& p : r.aut) pairs.push_back(pair_json(p));
    return dump({{"order", r.aut_order ? json(*r.aut_order) : json(nullptr)},
                 {"pairs", pairs},
                 {"flags", flags},
                 {"witnesses", w}});
  }
  std::string out = "n=" + std::to_string(r.n) + "\n";
  out += "card(Aut): " + (r.aut_order ? std::to_string(*r.aut_order) : std::string("unknown (above search cap)")) + "\n";
  out += "symmetrical: " + yes_no(r.symmetrical);
  if (r.symmetrical_witness) out += "  " + pair_text(*r.symmetrical_witness);
  out += "\nanti-symmetrical: " + yes_no(r.anti_symmetrical);
  if (r.anti_symmetrical_witness) out += "  " + pair_text(*r.anti_symmetrical_witness);
  out += "\ncoordinate-symmetric: " + yes_no(r.coordinate_symmetric);
  if (r.coordinate_witness) out += "  sigma=(" + r.coordinate_witness->to_string() + ")";
  out += "\ntranslation-symmetric: " + yes_no(r.translation_symmetric);
  if (r.translation_witness)
    out += "  lambda=" + r.translation_vector->to_string() + " g'=[" + map_text(r.translation_witness->gp) + "]";
  out += "\nself-dual: " + yes_no(r.self_dual) + "\n";
  for (const auto& p : r.aut) out += "  " + pair_text(p) + "\n";
  return out;
}

std::string render_system_comparison(const SystemPrefixSet& left, const SystemPrefixSet& right, Format f) {
  require_text_or_json(f, "system comparisons");
  std::vector<std::vector<std::uint32_t>> only_left, only_right;
  std::set_difference(left.sequences.begin(), left.sequences.end(), right.sequences.begin(), right.sequences.end(),
                      std::back_inserter(only_left));
  std::set_difference(right.sequences.begin(), right.sequences.end(), left.sequences.begin(), left.sequences.end(),
                      std::back_inserter(only_right));
  const bool equal = only_left.empty() && only_right.empty();
  if (f == Format::Json) {
    json l = json::array(), r = json::array();
    for (const auto& s : only_left) l.push_back(seq_json(s, left.n));
    for (const auto& s : only_right) r.push_back(seq_json(s, right.n));
    return dump({{"equal", equal},
                 {"horizon", left.horizon},
                 {"left_count", left.sequences.size()},
                 {"right_count", right.sequences.size()},
                 {"only_left", l},
                 {"only_right", r}});
  }
  auto seq_text = [](const std::vector<std::uint32_t>& s, int n) {
    std::string t;
    for (auto v : s) t += (t.empty() ? "" : " ") + bits_to_string(n, v);
    return t;
  };
  std::string out = "horizon " + std::to_string(left.horizon) + ": left " + std::to_string(left.sequences.size()) +
                    " sequences, right " + std::to_string(right.sequences.size()) + "\n";
  out += std::string("equal: ") + (equal ? "yes" : "no") + "\n";
  for (const auto& s : only_left) out += "  only left:  " + seq_text(s, left.n) + "\n";
  for (const auto& s : only_right) out += "  only right: " + seq_text(s, right.n) + "\n";
  return out;
}

}  // namespace bdsym
