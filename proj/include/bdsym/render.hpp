#pragma once

#include <bdsym/groups.hpp>
#include <bdsym/morphisms.hpp>
#include <bdsym/orbits.hpp>
#include <bdsym/portrait.hpp>

#include <string>
#include <vector>

namespace bdsym {

enum class Format { Text, Json, Dot };

/// Shortest round-tripping decimal form.
std::string format_time(double t);

std::string render_show(const TruthTable& phi, Format f);
std::string render_portrait(const PortraitGraph& graph, Format f);
std::string render_orbit(const OrbitPrefix& orbit, Format f);
/// {"initial": "<bits>", "breakpoints": [[t, "<bits>"], ...]}
std::string render_signal(const PiecewiseSignal& signal, Format f);
std::string render_branches(const std::vector<OrbitPrefix>& branches, const TimedSchedule* rho, const TruthTable& phi,
                            Format f, std::size_t max_listed);
/// Json: one {"g": [...], "gp": [...], "kind": ...} object per line.
std::string render_search(const SearchResult& result, PairKind kind, Format f);
std::string render_verification(const VerificationReport& report, Format f);
std::string render_group(const PairSet& group, const GroupCheck& check, Format f);
std::string render_classification(const SymmetryReport& report, Format f);
std::string render_system_comparison(const SystemPrefixSet& left, const SystemPrefixSet& right, Format f);

}  // namespace bdsym
