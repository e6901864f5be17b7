#pragma once

// Catalog assembly, per-entry analysis and report serialisation shared by the
// csgroups command and the test suite.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "csgroups/construct.hpp"
#include "csgroups/theorems.hpp"

namespace csg::app {

  inline constexpr char const* version = "1.0.0";

  enum ExitCode : int { exit_pass = 0, exit_usage = 1, exit_fail = 2, exit_inconclusive = 3 };

  struct Config {
    std::size_t           max_elements         = default_order_cap;
    std::size_t           max_normal_subgroups = default_normal_subgroup_limit;
    std::uint64_t         pair_sample_seed     = 0;
    std::string           format               = "json";
    unsigned              jobs                 = 0;  // 0: available parallelism
    std::filesystem::path fixtures;
    bool                  timings  = false;
    bool                  lemmas   = false;
    bool                  builtins = true;
    std::string           grid     = "default";

    nlohmann::json echo() const;
  };

  // A group to analyse: either a builtin expression or a fixture file.
  struct Target {
    std::string                          name;
    std::string                          source;  // "builtin:<expr>" or "fixture:<path>"
    std::optional<GroupSpec>             spec;
    std::optional<std::filesystem::path> path;
  };

  // "builtin:<expr>", "fixture:<name>" (resolved in the fixture directory,
  // ".txt" appended when missing) or "fixture:<path>". Throws ParameterError.
  Target resolve_target(std::string const& text, std::filesystem::path const& fixture_dir);

  // Fixture directory from the flag, else $CSGROUPS_FIXTURE_DIR, else the
  // directory configured at build time.
  std::filesystem::path default_fixture_dir();

  FiniteGroup load_target(Target const& t, Config const& cfg);

  // Builtin grid. Leaves are cyclic, dihedral, symmetric and alternating
  // groups of order <= 120, quaternion8, extraspecial(3), extraspecial(5),
  // seven Frobenius groups of order pq, and heisext(3). "full" adds every
  // product of two nontrivial leaves of order <= max_elements. "default"
  // keeps the nonabelian pairs, nonabelian leaves times C_m for m <= 12, and
  // C_a x C_b with a | b and ab <= 120. "small" is "default" capped at order
  // 200; "none" is empty. Names are unique.
  std::vector<Target> builtin_grid(std::string const& grid, std::size_t max_elements);

  // Every *.txt in `dir`, by file name. A missing directory yields nothing.
  std::vector<Target> fixture_catalog(std::filesystem::path const& dir);

  struct EntryResult {
    nlohmann::json           entry;
    nlohmann::json           findings = nlohmann::json::array();
    std::optional<LemmaReport> lemmas;
    std::size_t              order = 0;
    bool                     errored = false;
    bool                     failed = false;
    bool                     incomplete = false;
  };

  nlohmann::json verdict_json(TheoremVerdict const& v);
  nlohmann::json lemma_json(LemmaReport const& r);

  // Analyses one target: class sizes, structure summary and the A, C and CH
  // verdicts, plus the lemma suite when cfg.lemmas is set. Construction
  // errors are recorded in the entry instead of thrown.
  EntryResult analyse(Target const& t, Config const& cfg, bool with_structure = false);

  struct SweepOutcome {
    nlohmann::json report;
    LemmaReport    lemmas;
    std::size_t    errored = 0;
  };

  // Runs every target on a worker pool and merges in (order, name) order.
  SweepOutcome sweep(std::vector<Target> const& targets, Config const& cfg);

  // One row per entry.
  void write_csv(std::ostream& out, nlohmann::json const& report);

  // The catalog a sweep runs on: builtin grid (unless disabled) followed by
  // the fixture directory.
  std::vector<Target> sweep_catalog(Config const& cfg);

}  // namespace csg::app
