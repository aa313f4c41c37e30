#pragma once

// Command-line front end: `check`, `atlas`, `verify`. Kept in the library so
// tests can drive it without spawning processes.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lmc/criteria.hpp"

namespace lmc {

/// Canonical JSON for one report (sorted keys, no floats).
std::string report_to_json(const CriterionReport& report);

struct AtlasEntry {
    long a = 0;
    long ell = 0;
    unsigned k = 0;
    std::string source;
    std::string target;
    CriterionReport report;
    double wall_ms = 0.0;
};

struct InadmissibleEntry {
    long a = 0;
    long ell = 0;
    unsigned k = 0;
    std::string violated;
};

struct Atlas {
    Corollary corollary = Corollary::Rp_Euclidean;
    std::vector<AtlasEntry> entries;           ///< sorted by (a, ell, k)
    std::vector<InadmissibleEntry> inadmissible; ///< sorted by (a, ell, k)
};

/// Sweeps the grid. When `a_values` is empty, a runs from 1 through the first
/// value past the admissible range for each (ell, k). `threads` <= 0 keeps
/// the current OpenMP setting.
Atlas run_atlas(Corollary corollary, const std::vector<long>& a_values, const std::vector<long>& ell_values,
                const std::vector<unsigned>& k_values, int threads = 0);
Atlas run_atlas_serial(Corollary corollary, const std::vector<long>& a_values, const std::vector<long>& ell_values,
                       const std::vector<unsigned>& k_values);

/// Deterministic serialization; wall times are never written.
std::string atlas_to_json(const Atlas& atlas);

/// Parses "2..5", "2,4,8" or "3" into a sorted, de-duplicated list.
std::vector<long> parse_int_list(const std::string& text);

/// Runs the CLI with argv-style arguments (args[0] is the program name).
/// Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Applies LMC_THREADS (if set) to the OpenMP runtime.
void apply_thread_env();

} // namespace lmc
